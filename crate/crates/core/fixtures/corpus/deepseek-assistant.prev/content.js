// Adds an "Ask DeepSeek" button next to selected text.
document.addEventListener("mouseup", () => {
  const sel = window.getSelection().toString().trim();
  if (!sel) return;
  chrome.runtime.sendMessage({ type: "ask", prompt: sel }, (r) => {
    if (r && r.answer) console.log(r.answer);
  });
});
