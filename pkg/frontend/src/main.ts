// Browser bootstrap: binds the controller to the real DOM and re-renders
// after every state change. Kept thin; everything interesting lives in the
// controller and view modules.

import { ApiClient } from "./api.js";
import { AppController } from "./controller.js";
import { PX_PER_SECOND } from "./scrub.js";
import { renderBanner, renderDetailView, renderListView, thumbnailFor } from "./views.js";

const api = new ApiClient("");
const app = new AppController({ api, confirm: (msg) => window.confirm(msg) });
const root = document.getElementById("app")!;
const thumbnails = new Map<string, string>();

function render() {
  const { state } = app;
  let html = "";
  if (state.banner) html += renderBanner(state.banner);
  if (state.view === "detail" && state.detail) {
    html += renderDetailView(state.detail);
  } else {
    html += renderListView(state.rows, thumbnails);
    html +=
      `<div class="import-box"><label>Import climb file ` +
      `<input type="file" data-role="import" accept=".json"></label></div>`;
  }
  root.innerHTML = html;
  bind();
}

function bind() {
  root.querySelectorAll<HTMLElement>("[data-action=open]").forEach((el) =>
    el.addEventListener("click", async (event) => {
      event.preventDefault();
      await app.openClimb(el.dataset.id!);
      render();
    }),
  );

  root.querySelector<HTMLElement>("[data-action=back]")?.addEventListener("click", async () => {
    await app.showList();
    await loadThumbnails();
    render();
  });

  const importInput = root.querySelector<HTMLInputElement>("[data-role=import]");
  importInput?.addEventListener("change", async () => {
    const file = importInput.files?.[0];
    if (!file) return;
    await app.importClimb(await file.text());
    await loadThumbnails();
    render();
  });

  const scroller = root.querySelector<HTMLElement>("[data-role=graph-scroll]");
  const player = root.querySelector<HTMLVideoElement>("[data-role=player]");
  const marker = root.querySelector<HTMLElement>("[data-role=cut-marker]");
  scroller?.addEventListener("scroll", () => {
    app.onGraphScroll(scroller.scrollLeft, player ?? undefined);
    if (marker) {
      marker.style.left = `${app.state.markerSeconds * PX_PER_SECOND}px`;
    }
  });

  root.querySelector<HTMLElement>("[data-action=crop]")?.addEventListener("click", async () => {
    await app.cropAtMarker();
    render();
  });

  root.querySelector<HTMLElement>("[data-action=rename]")?.addEventListener("click", async () => {
    const title = window.prompt("New title:", app.state.detail?.title ?? "");
    if (title) {
      await app.renameTo(title);
      render();
    }
  });

  root.querySelector<HTMLElement>("[data-action=delete]")?.addEventListener("click", async () => {
    await app.deleteCurrent();
    await loadThumbnails();
    render();
  });

  const offsetInput = root.querySelector<HTMLInputElement>("[data-role=offset]");
  offsetInput?.addEventListener("change", async () => {
    await app.setOffset(Number(offsetInput.value));
    if (scroller) app.onGraphScroll(scroller.scrollLeft, player ?? undefined);
  });

  root
    .querySelector<HTMLElement>("[data-action=attach-video]")
    ?.addEventListener("click", async () => {
      const name = root.querySelector<HTMLInputElement>("[data-role=video-name]")?.value.trim();
      const fps = Number(root.querySelector<HTMLInputElement>("[data-role=video-fps]")?.value) || 30;
      if (name) {
        await app.attachNewVideo(name, fps);
        render();
      }
    });
}

async function loadThumbnails() {
  for (const row of app.state.rows) {
    if (!thumbnails.has(row.id)) {
      try {
        thumbnails.set(row.id, thumbnailFor(await api.getClimb(row.id)));
      } catch {
        thumbnails.set(row.id, "");
      }
    }
  }
}

(async () => {
  await app.showList();
  await loadThumbnails();
  render();
})();
