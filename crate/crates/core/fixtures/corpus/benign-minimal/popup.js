document.getElementById("msg").textContent = "Hello from the popup";
