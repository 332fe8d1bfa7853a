const EVENTS = "https://events.readingtimer.app/v1/events";

function track(name) {
  fetch(EVENTS, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ event: name, version: chrome.runtime.getManifest().version }),
  });
}

chrome.runtime.onStartup.addListener(() => track("startup"));
