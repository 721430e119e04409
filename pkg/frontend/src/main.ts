/** Browser entry point: wires the state machine to the DOM. */

import { ApiClient } from "./api.js";
import { ConsoleState } from "./state.js";
import { renderGroupDetail, renderGroupList, renderMetricsPanel } from "./render.js";

function requireElement(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el;
}

export function start(baseUrl: string = ""): ConsoleState {
  const listEl = requireElement("groups");
  const detailEl = requireElement("detail");
  const metricsEl = requireElement("metrics");
  const statusEl = requireElement("status");

  const api = new ApiClient(baseUrl);
  const state = new ConsoleState(api, {
    onListChanged: () => {
      listEl.innerHTML = renderGroupList(state.groups, state.cursor);
    },
    onDetailChanged: () => {
      detailEl.innerHTML = state.detail ? renderGroupDetail(state.detail) : "";
    },
    onMetricsChanged: () => {
      metricsEl.innerHTML = state.metrics ? renderMetricsPanel(state.metrics) : "";
    },
    onStatus: (message) => {
      statusEl.textContent = message;
    },
  });

  document.addEventListener("keydown", (event) => {
    if (event.ctrlKey || event.metaKey || event.altKey) return;
    void state.handleKey(event.key).then((consumed) => {
      if (consumed) event.preventDefault();
    });
  });

  listEl.addEventListener("click", (event) => {
    const row = (event.target as HTMLElement).closest<HTMLElement>(".group-row");
    if (row?.dataset.id) void state.selectById(row.dataset.id);
  });

  void state.load();
  return state;
}
