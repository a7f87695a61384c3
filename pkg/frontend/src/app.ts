/** Application shell: owns the wizard state and wires views to the API.
 * All state transitions round-trip through the service; reloading with a
 * session id reconstructs the exact view from server state. */

import { ApiClient, ApiError } from "./api.js";
import {
  buildCandidateRows,
  deriveViewModel,
  indexPassages,
  toggleSelection,
  uploadRejectionReason,
  type PassageInfo,
} from "./model.js";
import type {
  Audience,
  ExportFormat,
  SectionNodeDto,
  SessionDto,
  VerifiedCandidateDto,
} from "./types.js";
import {
  renderErrorBanner,
  renderExportView,
  renderProgress,
  renderReviewView,
  renderSectionsView,
  renderUploadView,
  renderWizardNav,
} from "./views.js";

export interface Downloader {
  (filename: string, bytes: Uint8Array, contentType: string): void;
}

function browserDownload(filename: string, bytes: Uint8Array, contentType: string): void {
  const blob = new Blob([bytes as BlobPart], { type: contentType });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

export class App {
  private docId: string | null = null;
  private session: SessionDto | null = null;
  private sections: SectionNodeDto[] = [];
  private chosenSections = new Set<string>();
  private verified: VerifiedCandidateDto[] = [];
  private passages = new Map<string, PassageInfo>();
  private pendingSelections: string[] = [];
  private exportFormat: ExportFormat = "markdown";
  private error: string | null = null;
  private uploadError: string | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
    private readonly download: Downloader = browserDownload,
  ) {}

  /** Initial render; pass a session id to reconstruct state from the server. */
  async start(sessionId?: string): Promise<void> {
    if (sessionId) {
      await this.loadSession(sessionId);
    } else {
      this.render();
    }
  }

  private async loadSession(sessionId: string): Promise<void> {
    this.session = await this.client.getSession(sessionId);
    this.docId = this.session.doc_id;
    this.chosenSections = new Set(this.session.selected_section_ids);
    this.pendingSelections = [...this.session.selections];
    const tree = await this.client.getSections(this.docId);
    this.sections = tree.sections;
    if (this.session.state === "generated" || this.session.state === "curated" || this.session.state === "exported") {
      await this.loadReviewData();
    }
    this.render();
  }

  private async loadReviewData(): Promise<void> {
    if (!this.session || !this.docId) return;
    this.verified = await this.client.getVerifiedCandidates(this.session.session_id);
    this.passages = indexPassages(await this.client.getStructure(this.docId));
  }

  private step(): string {
    if (!this.session) return "upload";
    return deriveViewModel(this.session).step;
  }

  private render(job?: { label: string; job: Parameters<typeof renderProgress>[2] }): void {
    this.root.textContent = "";
    renderWizardNav(this.root, this.step());
    if (this.error) {
      renderErrorBanner(this.root, this.error, () => void this.refresh());
    }
    if (job) {
      renderProgress(this.root, job.label, job.job);
    }
    const step = this.step();
    if (step === "upload") {
      renderUploadView(this.root, { onFile: (f) => void this.handleUpload(f) }, this.uploadError ?? undefined);
    } else if (step === "sections") {
      renderSectionsView(this.root, this.sections, this.chosenSections, {
        onToggle: (id, checked) => {
          if (checked) this.chosenSections.add(id);
          else this.chosenSections.delete(id);
        },
        onConfirm: () => void this.handleGenerate(),
      });
    } else if (step === "review") {
      const rows = buildCandidateRows(
        this.verified,
        this.passages,
        this.pendingSelections,
        this.session?.config.roundtrip_f1_threshold ?? 0.5,
      );
      renderReviewView(this.root, rows, {
        onToggle: (id) => {
          this.pendingSelections = toggleSelection(this.pendingSelections, id);
          this.render();
        },
        onConfirm: () => void this.handleSelect(),
      });
    } else {
      void this.renderExportStep();
    }
  }

  private async renderExportStep(): Promise<void> {
    if (!this.session) return;
    try {
      const [trainee, trainer] = await Promise.all([
        this.client.exportQuiz(this.session.session_id, "trainee", this.exportFormat),
        this.client.exportQuiz(this.session.session_id, "trainer", this.exportFormat),
      ]);
      const decoder = new TextDecoder();
      renderExportView(
        this.root,
        { trainee: decoder.decode(trainee.bytes), trainer: decoder.decode(trainer.bytes) },
        {
          onDownload: (audience, format) => void this.handleDownload(audience, format),
          onFormatChange: (format) => {
            this.exportFormat = format;
            this.render(); // re-fetches previews; no client-side rendering
          },
        },
        this.exportFormat,
      );
    } catch (error) {
      this.surface(error);
    }
  }

  private async handleUpload(file: File): Promise<void> {
    const rejection = uploadRejectionReason(file);
    if (rejection) {
      this.uploadError = rejection;
      this.render();
      return;
    }
    this.uploadError = null;
    try {
      let job = await this.client.uploadDocument(file, file.name);
      this.render({ label: "Ingesting document", job });
      job = await this.client.pollJob(job.job_id, {
        onProgress: (j) => this.render({ label: "Ingesting document", job: j }),
      });
      if (job.status === "failed" || !job.result_ref) {
        this.error = job.error ?? "ingest failed";
        this.session = null;
        this.render();
        return;
      }
      this.docId = job.result_ref;
      const tree = await this.client.getSections(this.docId);
      this.sections = tree.sections;
      this.session = await this.client.createSession(this.docId);
      this.error = null;
      this.render();
    } catch (error) {
      this.surface(error);
    }
  }

  private async handleGenerate(): Promise<void> {
    if (!this.session) return;
    if (this.chosenSections.size === 0) {
      this.error = "choose at least one section";
      this.render();
      return;
    }
    try {
      this.session = await this.client.chooseSections(
        this.session.session_id,
        [...this.chosenSections],
      );
      let job = await this.client.startGeneration(this.session.session_id);
      this.render({ label: "Generating questions", job });
      job = await this.client.pollJob(job.job_id, {
        onProgress: (j) => this.render({ label: "Generating questions", job: j }),
      });
      if (job.status === "failed") {
        this.error = job.error ?? "generation failed";
        this.render();
        return;
      }
      this.session = await this.client.getSession(this.session.session_id);
      await this.loadReviewData();
      this.error = null;
      this.render();
    } catch (error) {
      this.surface(error);
    }
  }

  private async handleSelect(): Promise<void> {
    if (!this.session) return;
    try {
      this.session = await this.client.setSelections(
        this.session.session_id,
        this.pendingSelections,
      );
      this.error = null;
      this.render();
    } catch (error) {
      this.surface(error);
    }
  }

  private async handleDownload(audience: Audience, format: ExportFormat): Promise<void> {
    if (!this.session) return;
    try {
      // Download exactly the endpoint's bytes; never re-render client-side.
      const { bytes, contentType } = await this.client.exportQuiz(
        this.session.session_id,
        audience,
        format,
      );
      const ext = format === "markdown" ? "md" : format;
      this.download(`quiz-${audience}.${ext}`, bytes, contentType);
    } catch (error) {
      this.surface(error);
    }
  }

  private async refresh(): Promise<void> {
    if (this.session) {
      await this.loadSession(this.session.session_id);
      this.error = null;
      this.render();
    } else {
      this.error = null;
      this.render();
    }
  }

  private surface(error: unknown): void {
    if (error instanceof ApiError && error.isStale) {
      this.error = `${error.message} — the session moved on; refresh to continue`;
    } else {
      this.error = error instanceof Error ? error.message : String(error);
    }
    this.render();
  }
}
