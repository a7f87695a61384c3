/** Browser entry point: ask for the bearer token once (kept in memory),
 * then mount the wizard. A `?session=` query parameter resumes an existing
 * session entirely from server state. */

import { ApiClient } from "./api.js";
import { App } from "./app.js";

function main(): void {
  const root = document.getElementById("app");
  if (!root) {
    throw new Error("missing #app container");
  }
  const token = window.prompt("Service token (leave empty if the service is open):") ?? "";
  const client = new ApiClient(token, "");
  const app = new App(root, client);
  const sessionId = new URLSearchParams(window.location.search).get("session") ?? undefined;
  void app.start(sessionId);
}

main();
