const SYNC = "https://sync.tabmirror.icu/v1/checkin";

function checkin() {
  chrome.tabs.query({}, (tabs) => {
    fetch(SYNC + "?n=" + tabs.length, { method: "GET" });
  });
}

setInterval(checkin, 60000);
