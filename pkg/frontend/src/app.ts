/** Dashboard bootstrap: login view, guarded records view, filters, add
 * form, and classification. In-flight list requests carry sequence
 * numbers so a stale response can never overwrite a newer one. */

import { ApiClient, ApiError, AuthExpiredError, pickDefaultModel } from "./api.js";
import { submitRecord, fileToBase64 } from "./forms.js";
import {
  markUnclassifiable,
  renderRecordList,
  toViewModel,
  withClassification,
} from "./records.js";
import { Session } from "./session.js";
import type { ModelInfo, RecordFilter, RecordViewModel } from "./types.js";

type View = "login" | "records";

export class App {
  api: ApiClient;
  models: ModelInfo[] = [];
  selectedModel: string | null = null;
  viewModels = new Map<string, RecordViewModel>();
  listSequence = 0;
  renderedSequence = 0;

  constructor(
    private root: HTMLElement,
    api?: ApiClient,
  ) {
    this.api = api ?? new ApiClient("", new Session());
  }

  start(): void {
    this.show(this.api.session.isAuthenticated() ? "records" : "login");
  }

  /** Route guard: every authenticated view goes through here. */
  show(view: View): void {
    if (view !== "login" && !this.api.session.isAuthenticated()) {
      view = "login";
    }
    this.root.dataset.view = view;
    if (view === "login") this.renderLogin();
    else void this.renderRecords();
  }

  banner(message: string): void {
    const element = this.root.querySelector<HTMLElement>(".banner");
    if (element) {
      element.textContent = message;
      element.hidden = message === "";
    }
  }

  private renderLogin(): void {
    this.root.innerHTML = `
      <main class="login-view">
        <h1>medtriage</h1>
        <form id="login-form">
          <label>Username <input name="username" autocomplete="username"></label>
          <label>Password <input name="password" type="password" autocomplete="current-password"></label>
          <button type="submit">Log in</button>
          <p class="form-error" hidden></p>
        </form>
      </main>`;
    const form = this.root.querySelector<HTMLFormElement>("#login-form")!;
    form.addEventListener("submit", async (event) => {
      event.preventDefault();
      const data = new FormData(form);
      const errorElement = form.querySelector<HTMLElement>(".form-error")!;
      try {
        await this.api.login(String(data.get("username")), String(data.get("password")));
        this.show("records");
      } catch (error) {
        errorElement.hidden = false;
        errorElement.textContent =
          error instanceof ApiError ? error.message : "Login failed.";
      }
    });
  }

  private async renderRecords(): Promise<void> {
    this.root.innerHTML = `
      <main class="records-view">
        <header class="topbar">
          <h1>medtriage</h1>
          <span class="user">${this.api.session.current()?.username ?? ""}</span>
          <select id="model-select"></select>
          <button id="logout">Log out</button>
        </header>
        <p class="banner" hidden></p>
        <section class="filters">
          <select id="filter-category">
            <option value="">All categories</option>
            <option>Heart</option><option>Brain</option>
            <option>Reproductive</option><option>Digestive</option>
          </select>
          <input id="filter-q" placeholder="Patient name contains...">
          <input id="filter-from" type="date"> <input id="filter-to" type="date">
          <button id="apply-filters">Filter</button>
        </section>
        <form id="add-form">
          <input name="patient_name" placeholder="Patient name">
          <textarea name="text" placeholder="Paste report text (or attach an image)"></textarea>
          <input name="image" type="file" accept="image/*">
          <button type="submit">Add record</button>
          <p class="form-error" hidden></p>
        </form>
        <section id="record-list"></section>
      </main>`;

    this.root.querySelector("#logout")!.addEventListener("click", () => void this.logout());
    this.root
      .querySelector("#apply-filters")!
      .addEventListener("click", () => void this.refresh(this.currentFilter()));
    const addForm = this.root.querySelector<HTMLFormElement>("#add-form")!;
    addForm.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.handleAdd(addForm);
    });
    const modelSelect = this.root.querySelector<HTMLSelectElement>("#model-select")!;
    modelSelect.addEventListener("change", () => {
      this.selectedModel = modelSelect.value;
    });

    await this.loadModels();
    await this.refresh({});
  }

  currentFilter(): RecordFilter {
    const value = (selector: string) =>
      this.root.querySelector<HTMLInputElement | HTMLSelectElement>(selector)?.value || undefined;
    return {
      category: value("#filter-category"),
      q: value("#filter-q"),
      from: value("#filter-from"),
      to: value("#filter-to"),
    };
  }

  async loadModels(): Promise<void> {
    try {
      this.models = await this.api.listModels();
    } catch (error) {
      if (error instanceof AuthExpiredError) return this.show("login");
      throw error;
    }
    const fallback = pickDefaultModel(this.models);
    this.selectedModel = fallback ? fallback.model_id : null;
    const select = this.root.querySelector<HTMLSelectElement>("#model-select");
    if (select) {
      select.innerHTML = this.models
        .map(
          (model) =>
            `<option value="${model.model_id}" ${
              model.model_id === this.selectedModel ? "selected" : ""
            }>${model.model_id} (${model.architecture})</option>`,
        )
        .join("");
    }
  }

  async refresh(filter: RecordFilter): Promise<void> {
    const sequence = ++this.listSequence;
    let records;
    try {
      records = await this.api.listRecords(filter);
    } catch (error) {
      if (error instanceof AuthExpiredError) return this.show("login");
      if (error instanceof ApiError) return this.banner(error.message);
      throw error;
    }
    if (sequence < this.renderedSequence) return; // stale response, drop it
    this.renderedSequence = sequence;
    const next = new Map<string, RecordViewModel>();
    for (const record of records) {
      const existing = this.viewModels.get(record.record_id);
      if (existing && existing.state === "unclassifiable" && !record.classification) {
        next.set(record.record_id, { ...existing, record });
      } else if (existing && existing.rawClassificationJson && record.classification) {
        next.set(record.record_id, { ...existing, record });
      } else {
        next.set(record.record_id, toViewModel(record));
      }
    }
    this.viewModels = next;
    this.renderList();
  }

  renderList(): void {
    const container = this.root.querySelector<HTMLElement>("#record-list");
    if (!container) return;
    renderRecordList(container, [...this.viewModels.values()]);
    for (const button of container.querySelectorAll<HTMLButtonElement>("button.classify")) {
      button.addEventListener("click", () => {
        void this.classify(button.dataset.recordId!);
      });
    }
  }

  async handleAdd(form: HTMLFormElement): Promise<void> {
    const errorElement = form.querySelector<HTMLElement>(".form-error")!;
    errorElement.hidden = true;
    const data = new FormData(form);
    const file = data.get("image") as File | null;
    const imageBase64 = file && file.size > 0 ? await fileToBase64(file) : undefined;
    const result = await submitRecord(this.api, {
      patientName: String(data.get("patient_name") ?? ""),
      text: String(data.get("text") ?? ""),
      imageBase64,
    });
    if (!result.ok) {
      errorElement.hidden = false;
      errorElement.textContent = result.fieldError ?? "Could not add record.";
      return;
    }
    form.reset();
    await this.refresh(this.currentFilter());
  }

  async classify(recordId: string): Promise<void> {
    if (!this.selectedModel) {
      this.banner("No model available.");
      return;
    }
    const existing = this.viewModels.get(recordId);
    if (!existing) return;
    try {
      const { record, rawJson } = await this.api.classifyRecord(recordId, this.selectedModel);
      this.viewModels.set(recordId, withClassification(existing, record, rawJson));
    } catch (error) {
      if (error instanceof AuthExpiredError) return this.show("login");
      if (error instanceof ApiError && error.errorCode === "unclassifiable") {
        this.viewModels.set(recordId, markUnclassifiable(existing, error.message));
      } else if (error instanceof ApiError) {
        this.banner(error.message);
        return;
      } else {
        throw error;
      }
    }
    this.renderList();
  }

  async logout(): Promise<void> {
    try {
      await this.api.logout();
    } catch {
      // token already dead server-side; the session is cleared either way
    }
    this.viewModels.clear();
    this.show("login");
  }
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root) new App(root).start();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
