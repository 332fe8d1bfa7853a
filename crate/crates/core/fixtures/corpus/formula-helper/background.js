chrome.runtime.onMessage.addListener((msg, sender, reply) => {
  if (msg.type === "calc") {
    reply({ value: eval(msg.expr) });
  }
});
