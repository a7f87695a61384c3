/** Pure view-model derivation. The wizard mirrors the server's session
 * state machine: a step is reachable exactly when the state allows it, so
 * the UI never offers an action the server would reject. */

import type {
  CandidateDto,
  CandidateStatus,
  SessionDto,
  SessionState,
  VerifiedCandidateDto,
} from "./types.js";

export type WizardStep = "upload" | "sections" | "review" | "export";

const STEP_FOR_STATE: Record<SessionState, WizardStep> = {
  created: "sections",
  sections_chosen: "sections",
  generated: "review",
  curated: "export",
  exported: "export",
};

export interface SessionViewModel {
  sessionId: string;
  docId: string;
  state: SessionState;
  step: WizardStep;
  statusCounts: Record<CandidateStatus, number>;
  poolSize: number;
  selectedCount: number;
  canChooseSections: boolean;
  canGenerate: boolean;
  canSelect: boolean;
  canExport: boolean;
}

export function deriveViewModel(
  session: SessionDto,
  candidates: CandidateDto[] = [],
): SessionViewModel {
  const statusCounts: Record<CandidateStatus, number> = {
    generated: 0,
    rejected_duplicate: 0,
    verified: 0,
    rejected_no_answer: 0,
  };
  for (const candidate of candidates) {
    statusCounts[candidate.status] += 1;
  }
  return {
    sessionId: session.session_id,
    docId: session.doc_id,
    state: session.state,
    step: STEP_FOR_STATE[session.state],
    statusCounts,
    poolSize: session.candidate_pool.length,
    selectedCount: session.selections.length,
    canChooseSections: session.state === "created",
    canGenerate: session.state === "sections_chosen",
    canSelect: session.state === "generated",
    canExport: session.state === "curated" || session.state === "exported",
  };
}

export interface PassageInfo {
  text: string;
  sectionNumber: string;
  sectionTitle: string;
}

/** passage_id -> display info, joined from the interchange document. */
export function indexPassages(structure: {
  sections: { section_id: string; number: string; title: string }[];
  passages: { passage_id: string; section_id: string; text: string }[];
}): Map<string, PassageInfo> {
  const sections = new Map(structure.sections.map((s) => [s.section_id, s]));
  const out = new Map<string, PassageInfo>();
  for (const passage of structure.passages) {
    const section = sections.get(passage.section_id);
    out.set(passage.passage_id, {
      text: passage.text,
      sectionNumber: section?.number ?? "",
      sectionTitle: section?.title ?? "",
    });
  }
  return out;
}

export interface CandidateRow {
  candidateId: string;
  questionText: string;
  answerText: string;
  passageExcerpt: string;
  sectionNumber: string;
  strategy: "answer_aware" | "answer_agnostic";
  roundtripWarning: boolean;
  selected: boolean;
}

/** Only verified candidates become selectable rows; the warning badge marks
 * answer-aware questions whose round-trip score fell under the threshold. */
export function buildCandidateRows(
  verified: VerifiedCandidateDto[],
  passages: Map<string, PassageInfo>,
  selections: readonly string[],
  roundtripThreshold: number,
): CandidateRow[] {
  const selected = new Set(selections);
  return verified
    .filter((c) => c.status === "verified")
    .map((c) => {
      const passage = passages.get(c.passage_id);
      return {
        candidateId: c.candidate_id,
        questionText: c.question_text,
        answerText: c.answer_text,
        passageExcerpt: passage?.text ?? "",
        sectionNumber: passage?.sectionNumber ?? "",
        strategy: c.strategy,
        roundtripWarning: c.roundtrip_f1 !== null && c.roundtrip_f1 < roundtripThreshold,
        selected: selected.has(c.candidate_id),
      };
    });
}

/** Selection order is the quiz order; toggling preserves first-toggled-first. */
export function toggleSelection(selections: readonly string[], candidateId: string): string[] {
  if (selections.includes(candidateId)) {
    return selections.filter((id) => id !== candidateId);
  }
  return [...selections, candidateId];
}

export const MAX_UPLOAD_BYTES = 20 * 1024 * 1024;

/** Client-side guard: oversized or empty files never reach the server. */
export function uploadRejectionReason(file: { size: number; name: string }): string | null {
  if (file.size > MAX_UPLOAD_BYTES) {
    return `${file.name} is ${(file.size / 1024 / 1024).toFixed(1)} MB; the limit is 20 MB`;
  }
  if (file.size === 0) {
    return `${file.name} is empty`;
  }
  return null;
}
