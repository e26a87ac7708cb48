/** Page bootstrap: mounts the composer against a configurable service. */

import { CrsClient } from "./api.js";
import { Composer } from "./composer.js";

export { CrsClient } from "./api.js";
export { Composer } from "./composer.js";
export { DEBOUNCE_MS, debounce } from "./debounce.js";

export function mount(root: HTMLElement, serviceUrl?: string): Composer {
  const base =
    serviceUrl ??
    root.dataset.serviceUrl ??
    "http://127.0.0.1:8080";
  return new Composer(root, new CrsClient(base), {
    onSubmit: (text) => {
      root.dispatchEvent(new CustomEvent("crs-post", { detail: { text } }));
    },
  });
}

if (typeof document !== "undefined") {
  const root = document.querySelector<HTMLElement>("[data-crs-composer]");
  if (root) mount(root);
}
