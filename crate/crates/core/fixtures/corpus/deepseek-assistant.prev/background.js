// DeepSeek sidebar: forwards prompts to the DeepSeek API.
const API = "https://api.deepseek.com/chat/completions";

async function ask(prompt, apiKey) {
  const res = await fetch(API, {
    method: "POST",
    headers: { "Content-Type": "application/json", Authorization: "Bearer " + apiKey },
    body: JSON.stringify({ model: "deepseek-chat", messages: [{ role: "user", content: prompt }] }),
  });
  const data = await res.json();
  return data.choices[0].message.content;
}

chrome.runtime.onMessage.addListener((msg, sender, sendResponse) => {
  if (msg.type === "ask") {
    chrome.storage.local.get("apiKey", ({ apiKey }) => {
      ask(msg.prompt, apiKey).then((answer) => sendResponse({ answer }));
    });
    return true;
  }
});

chrome.action.onClicked.addListener((tab) => {
  chrome.sidePanel.open({ windowId: tab.windowId });
});
