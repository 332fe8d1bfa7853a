chrome.runtime.onInstalled.addListener(() => {
  chrome.tabs.create({
    url: "photoroomeditor.html"
  });
});
