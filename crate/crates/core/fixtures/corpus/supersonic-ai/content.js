// Reads the open message and asks the worker for a summary.
function currentMessageText() {
  const body = document.querySelector("div.a3s");
  return body ? body.innerText : "";
}

function requestSummary() {
  const text = currentMessageText();
  if (!text) return;
  chrome.runtime.sendMessage({ action: "generateSummary", content: text }, (resp) => {
    if (resp && resp.summary) showSummary(resp.summary);
  });
}

function showSummary(s) {
  let box = document.getElementById("ss-summary");
  if (!box) {
    box = document.createElement("div");
    box.id = "ss-summary";
    document.body.appendChild(box);
  }
  box.textContent = s;
}

new MutationObserver(requestSummary).observe(document.body, { childList: true, subtree: true });
