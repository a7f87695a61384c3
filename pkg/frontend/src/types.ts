/** Wire types mirroring the service's JSON payloads. */

export type SessionState =
  | "created"
  | "sections_chosen"
  | "generated"
  | "curated"
  | "exported";

export interface GeneratorConfigDto {
  num_beams: number;
  questions_per_passage_cap: number;
  dedup_threshold: number;
  strategies: string[];
  strip_parentheticals: boolean;
  roundtrip_f1_threshold: number;
  [extra: string]: unknown;
}

export interface SessionDto {
  session_id: string;
  doc_id: string;
  state: SessionState;
  config: GeneratorConfigDto;
  selected_section_ids: string[];
  candidate_pool: string[];
  selections: string[];
  rejection_report: RejectionReportDto | null;
  created_at: string;
  updated_at: string;
}

export interface RejectionReportDto {
  total: number;
  verified: number;
  rejected_no_answer: number;
  errors: number;
}

export interface JobDto {
  job_id: string;
  kind: "ingest" | "generate";
  status: "queued" | "running" | "succeeded" | "failed";
  progress: { done: number; total: number };
  result_ref: string | null;
  error: string | null;
}

export interface SectionNodeDto {
  section_id: string;
  number: string;
  title: string;
  depth: number;
  children: string[];
  n_passages: number;
}

export interface SectionTreeDto {
  doc_id: string;
  sections: SectionNodeDto[];
}

export interface PassageDto {
  passage_id: string;
  doc_id: string;
  section_id: string;
  text: string;
  source_span: [number, number, number];
  approx_tokens: number;
  preprocessed: boolean;
}

/** Canonical interchange document stored at ingest time. */
export interface StructureDto {
  doc_id: string;
  sections: {
    section_id: string;
    number: string;
    title: string;
    depth: number;
    passages: string[];
    children: string[];
  }[];
  passages: PassageDto[];
}

export type CandidateStatus =
  | "generated"
  | "rejected_duplicate"
  | "verified"
  | "rejected_no_answer";

export interface CandidateDto {
  candidate_id: string;
  passage_id: string;
  question_text: string;
  strategy: "answer_aware" | "answer_agnostic";
  backend_id: string;
  beam_score: number;
  beam_rank: number;
  seed_answer: { text: string; start_char: number; end_char: number } | null;
  roundtrip_f1: number | null;
  status: CandidateStatus;
  duplicate_of: string | null;
  error: string | null;
}

/** Verified rows carry the extracted answer fields merged in. */
export interface VerifiedCandidateDto extends CandidateDto {
  answer_text: string;
  answer_start_char: number;
  answer_end_char: number;
  answer_score: number;
  no_answer_score: number;
}

export type Audience = "trainee" | "trainer";
export type ExportFormat = "markdown" | "json" | "html";
