/** Single-page shell with client routing over the pipeline pages. */

import { ApiClient } from "./api";
import { SessionStore } from "./store";
import { renderClean } from "./views/clean";
import { renderExplore } from "./views/explore";
import { renderPlanBoard } from "./views/plan";
import { renderUpload } from "./views/upload";
import "./styles.css";

const PAGES = [
  ["gather", "Gather Data", renderUpload],
  ["explore", "Explore", renderExplore],
  ["clean", "Clean", renderClean],
  ["plan", "Plan & Export", renderPlanBoard],
] as const;

export function mountApp(root: HTMLElement, store?: SessionStore) {
  const sessionStore = store ?? new SessionStore(new ApiClient(""));
  root.innerHTML = `
    <header class="topbar">
      <h1>dataprep studio</h1>
      <nav data-role="nav"></nav>
      <span class="version" data-role="version"></span>
    </header>
    <main data-role="page"></main>
  `;
  const nav = root.querySelector<HTMLElement>('[data-role="nav"]')!;
  const page = root.querySelector<HTMLElement>('[data-role="page"]')!;
  nav.innerHTML = PAGES.map(
    ([id, label]) => `<a href="#${id}" data-page-link="${id}">${label}</a>`,
  ).join("");

  let disposePage: (() => void) | null = null;
  const renderRoute = () => {
    const hash = window.location.hash.replace("#", "") || "gather";
    const entry = PAGES.find(([id]) => id === hash) ?? PAGES[0];
    nav.querySelectorAll("a").forEach((a) => {
      a.classList.toggle("active", a.dataset.pageLink === entry[0]);
    });
    disposePage?.();
    disposePage = entry[2](page, sessionStore);
    sessionStore.notify();
  };

  window.addEventListener("hashchange", renderRoute);
  renderRoute();

  sessionStore.subscribe((state) => {
    const badge = root.querySelector<HTMLElement>('[data-role="version"]')!;
    badge.textContent = state.sessionId
      ? `session ${state.sessionId.slice(0, 8)} · v${state.version} · ${state.rowCount} rows`
      : "no session";
  });
  return sessionStore;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app")!);
}
