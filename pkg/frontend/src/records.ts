/** Record list rendering. Rows mirror the server-filtered response
 * exactly; this module applies no filtering of its own. */

import { probabilityBars } from "./bars.js";
import type { PatientRecord, RecordViewModel } from "./types.js";

export const CLASS_ORDER = ["Heart", "Brain", "Reproductive", "Digestive"];

export function toViewModel(record: PatientRecord): RecordViewModel {
  return {
    record,
    state: record.classification ? "classified" : "pending",
    stateDetail: "",
    rawClassificationJson: null,
  };
}

export function markUnclassifiable(model: RecordViewModel, reason: string): RecordViewModel {
  return { ...model, state: "unclassifiable", stateDetail: reason };
}

export function withClassification(
  model: RecordViewModel,
  record: PatientRecord,
  rawJson: string,
): RecordViewModel {
  return { record, state: "classified", stateDetail: "", rawClassificationJson: rawJson };
}

function barsHtml(model: RecordViewModel): string {
  const classification = model.record.classification;
  if (!classification) return "";
  const bars = probabilityBars(CLASS_ORDER, classification.probabilities);
  return bars
    .map(
      (bar) => `
      <div class="bar-row" data-label="${bar.label}" data-percent="${bar.percent}">
        <span class="bar-label">${bar.label}</span>
        <span class="bar-track"><span class="bar-fill" style="width:${bar.percent}%"></span></span>
        <span class="bar-value">${bar.percent}%</span>
      </div>`,
    )
    .join("");
}

export function renderRecordRow(model: RecordViewModel): HTMLElement {
  const row = document.createElement("article");
  row.className = `record state-${model.state}`;
  row.dataset.recordId = model.record.record_id;
  const classification = model.record.classification;
  const status =
    model.state === "classified" && classification
      ? `<span class="label">${classification.label}</span>`
      : model.state === "unclassifiable"
        ? `<span class="unclassifiable" title="${model.stateDetail}">unclassifiable</span>`
        : `<span class="pending">pending</span>`;
  row.innerHTML = `
    <header>
      <strong class="patient">${escapeHtml(model.record.patient_name)}</strong>
      <time>${new Date(model.record.created_at).toLocaleString()}</time>
      ${status}
    </header>
    <p class="findings">${escapeHtml(model.record.findings_text)}</p>
    <div class="bars">${barsHtml(model)}</div>
    <footer>
      <button class="classify" data-record-id="${model.record.record_id}"
        ${model.state === "classified" ? "" : ""}>classify</button>
      ${model.state === "unclassifiable" ? `<span class="why">${escapeHtml(model.stateDetail)}</span>` : ""}
    </footer>`;
  return row;
}

export function renderRecordList(
  container: HTMLElement,
  models: RecordViewModel[],
): void {
  container.textContent = "";
  if (models.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No records match.";
    container.appendChild(empty);
    return;
  }
  for (const model of models) {
    container.appendChild(renderRecordRow(model));
  }
}

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
