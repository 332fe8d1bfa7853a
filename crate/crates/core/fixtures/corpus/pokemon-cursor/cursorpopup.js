const grid = document.getElementById("cursors");
["pikachu", "eevee", "snorlax"].forEach((name) => {
  const b = document.createElement("button");
  b.textContent = name;
  b.onclick = () => chrome.storage.local.set({ cursor: name });
  grid.appendChild(b);
});
