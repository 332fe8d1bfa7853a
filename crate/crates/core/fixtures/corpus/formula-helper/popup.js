document.getElementById("f").addEventListener("change", (e) => {
  chrome.runtime.sendMessage({ type: "calc", expr: e.target.value });
});
