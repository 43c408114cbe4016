import { ApiClient } from "./api.js";
import { Session } from "./session.js";
import { mount } from "./view.js";

const api = new ApiClient();
const session = new Session(api);
mount(session, document.getElementById("app") as HTMLElement);

void api
  .health()
  .then((health) => {
    const hint = document.querySelector(".hint");
    if (hint) hint.textContent = `Engine up: ${health.groups} groups, ${health.rules} rules.`;
  })
  .catch(() => {
    const hint = document.querySelector(".hint");
    if (hint) hint.textContent = "Engine unreachable; is the service running?";
  });
