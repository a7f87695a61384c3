/** DOM renderers for the four wizard steps. Pure functions of state plus
 * callbacks; no business logic, no client-side pipeline decisions. */

import type { CandidateRow } from "./model.js";
import type { JobDto, SectionNodeDto } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export function renderWizardNav(container: HTMLElement, activeStep: string): void {
  const nav = el("nav", { class: "wizard-nav" });
  for (const step of ["upload", "sections", "review", "export"]) {
    const cls = step === activeStep ? "wizard-step active" : "wizard-step";
    nav.appendChild(el("span", { class: cls, "data-step": step }, step));
  }
  container.appendChild(nav);
}

export function renderUploadView(
  container: HTMLElement,
  callbacks: { onFile: (file: File) => void },
  error?: string,
): void {
  const section = el("section", { class: "view upload-view" });
  section.appendChild(el("h2", {}, "Upload a procedure document"));
  section.appendChild(el("p", {}, "PDF, plain text, or markdown. 20 MB max."));
  const input = el("input", { type: "file", id: "file-input", accept: ".pdf,.txt,.md" });
  input.addEventListener("change", () => {
    const file = (input as HTMLInputElement).files?.[0];
    if (file) {
      callbacks.onFile(file);
    }
  });
  section.appendChild(input);
  if (error) {
    const banner = el("div", { class: "error-banner", role: "alert" }, error);
    const retry = el("button", { class: "retry" }, "Retry");
    retry.addEventListener("click", () => (input as HTMLInputElement).click());
    banner.appendChild(retry);
    section.appendChild(banner);
  }
  container.appendChild(section);
}

export function renderProgress(container: HTMLElement, label: string, job: JobDto): void {
  const wrap = el("div", { class: "progress", "data-job": job.job_id });
  const total = job.progress.total || 1;
  wrap.appendChild(el("span", { class: "progress-label" }, label));
  const bar = el("progress", {
    max: String(total),
    value: String(job.progress.done),
  });
  wrap.appendChild(bar);
  wrap.appendChild(
    el("span", { class: "progress-text" }, `${job.progress.done}/${job.progress.total}`),
  );
  container.appendChild(wrap);
}

export function renderSectionsView(
  container: HTMLElement,
  sections: SectionNodeDto[],
  chosen: ReadonlySet<string>,
  callbacks: {
    onToggle: (sectionId: string, checked: boolean) => void;
    onConfirm: () => void;
  },
): void {
  const view = el("section", { class: "view sections-view" });
  view.appendChild(el("h2", {}, "Choose sections"));
  const list = el("ul", { class: "section-tree" });
  for (const section of sections) {
    const item = el("li", {
      class: "section-node",
      style: `margin-left: ${(section.depth - 1) * 1.5}rem`,
    });
    const box = el("input", {
      type: "checkbox",
      id: `sec-${section.section_id}`,
      "data-section": section.section_id,
    }) as HTMLInputElement;
    box.checked = chosen.has(section.section_id);
    box.addEventListener("change", () => callbacks.onToggle(section.section_id, box.checked));
    const label = el(
      "label",
      { for: `sec-${section.section_id}` },
      `${section.number} ${section.title} (${section.n_passages} passages)`,
    );
    item.appendChild(box);
    item.appendChild(label);
    list.appendChild(item);
  }
  view.appendChild(list);
  const confirm = el("button", { id: "confirm-sections" }, "Generate questions");
  confirm.addEventListener("click", callbacks.onConfirm);
  view.appendChild(confirm);
  container.appendChild(view);
}

export function renderReviewView(
  container: HTMLElement,
  rows: CandidateRow[],
  callbacks: {
    onToggle: (candidateId: string) => void;
    onConfirm: () => void;
  },
): void {
  const view = el("section", { class: "view review-view" });
  view.appendChild(el("h2", {}, "Review verified questions"));
  const count = rows.filter((r) => r.selected).length;
  view.appendChild(
    el("p", { class: "selection-count" }, `${count} of ${rows.length} selected`),
  );
  const table = el("table", { class: "candidates" });
  const head = el("tr");
  for (const title of ["", "Question", "Answer", "Passage", ""]) {
    head.appendChild(el("th", {}, title));
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = el("tr", { class: "candidate-row", "data-candidate": row.candidateId });
    const boxCell = el("td");
    const box = el("input", {
      type: "checkbox",
      "data-select": row.candidateId,
    }) as HTMLInputElement;
    box.checked = row.selected;
    box.addEventListener("change", () => callbacks.onToggle(row.candidateId));
    boxCell.appendChild(box);
    tr.appendChild(boxCell);

    const qCell = el("td", { class: "question" }, row.questionText);
    const badges = el("span", { class: "badges" });
    badges.appendChild(el("span", { class: `badge strategy-${row.strategy}` }, row.strategy));
    if (row.roundtripWarning) {
      badges.appendChild(
        el("span", { class: "badge roundtrip-warning", title: "round-trip answer mismatch" }, "⚠ round-trip"),
      );
    }
    qCell.appendChild(badges);
    tr.appendChild(qCell);

    tr.appendChild(el("td", { class: "answer" }, row.answerText));

    const passageCell = el("td");
    const passage = el("div", { class: "passage collapsed" }, row.passageExcerpt);
    passage.addEventListener("click", () => passage.classList.toggle("collapsed"));
    passageCell.appendChild(passage);
    tr.appendChild(passageCell);

    tr.appendChild(el("td", { class: "section-ref" }, `§${row.sectionNumber}`));
    table.appendChild(tr);
  }
  view.appendChild(table);
  const confirm = el("button", { id: "confirm-selection" }, "Confirm selection");
  confirm.addEventListener("click", callbacks.onConfirm);
  view.appendChild(confirm);
  container.appendChild(view);
}

export function renderExportView(
  container: HTMLElement,
  previews: { trainee: string; trainer: string },
  callbacks: {
    onDownload: (audience: "trainee" | "trainer", format: "markdown" | "json" | "html") => void;
    onFormatChange: (format: "markdown" | "json" | "html") => void;
  },
  format: string,
): void {
  const view = el("section", { class: "view export-view" });
  view.appendChild(el("h2", {}, "Export"));

  const picker = el("select", { id: "format-picker" });
  for (const fmt of ["markdown", "json", "html"]) {
    const option = el("option", { value: fmt }, fmt);
    if (fmt === format) {
      option.setAttribute("selected", "selected");
    }
    picker.appendChild(option);
  }
  picker.addEventListener("change", () =>
    callbacks.onFormatChange((picker as HTMLSelectElement).value as "markdown" | "json" | "html"),
  );
  view.appendChild(picker);

  const panes = el("div", { class: "previews" });
  for (const audience of ["trainee", "trainer"] as const) {
    const pane = el("div", { class: `preview ${audience}` });
    pane.appendChild(el("h3", {}, `${audience} copy`));
    pane.appendChild(el("pre", { "data-preview": audience }, previews[audience]));
    const button = el("button", { "data-download": audience }, `Download ${audience}`);
    button.addEventListener("click", () =>
      callbacks.onDownload(audience, (picker as HTMLSelectElement).value as "markdown" | "json" | "html"),
    );
    pane.appendChild(button);
    panes.appendChild(pane);
  }
  view.appendChild(panes);
  container.appendChild(view);
}

export function renderErrorBanner(
  container: HTMLElement,
  message: string,
  onRefresh?: () => void,
): void {
  const banner = el("div", { class: "error-banner", role: "alert" }, message);
  if (onRefresh) {
    const refresh = el("button", { class: "refresh" }, "Refresh");
    refresh.addEventListener("click", onRefresh);
    banner.appendChild(refresh);
  }
  container.appendChild(banner);
}
