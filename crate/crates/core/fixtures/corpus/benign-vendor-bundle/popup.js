document.getElementById("in").addEventListener("input", (e) => {
  document.getElementById("out").innerHTML = DOMPurify.sanitize(e.target.value);
});
