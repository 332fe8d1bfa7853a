const API_BASE = "https://api.gosupersonic.email/api";

async function postJson(path, payload) {
  const res = await fetch(API_BASE + path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
  return res.json();
}

function summarize(content) {
  return postJson("/generate-summary/", {
    content: content,
    created_at: new Date().toISOString(),
    summary_type: "tldr",
  });
}

chrome.runtime.onMessage.addListener((request, sender, sendResponse) => {
  if (request.action === "generateSummary") {
    summarize(request.content).then((r) => sendResponse({ summary: r.summary }));
    return true;
  }
  if (request.action === "ping") {
    sendResponse({ ok: true });
  }
});
