export interface Classification {
  label: string;
  probabilities: number[];
  model_id: string;
}

export interface PatientRecord {
  record_id: string;
  patient_name: string;
  created_at: string;
  raw_text: string;
  findings_text: string;
  classification: Classification | null;
}

export interface ModelInfo {
  model_id: string;
  architecture: string;
  trained_at: string | null;
  test_accuracy: number | null;
}

export interface LoginResponse {
  token: string;
  expires_at: string;
}

export interface ApiErrorBody {
  error_code: string;
  message: string;
}

export interface RecordFilter {
  category?: string;
  q?: string;
  from?: string;
  to?: string;
}

export type DisplayState = "pending" | "classified" | "unclassifiable";

/** A record as the UI tracks it: the server payload, a display state, and
 * the raw classification response text so every shown value is
 * byte-traceable to an API response. */
export interface RecordViewModel {
  record: PatientRecord;
  state: DisplayState;
  stateDetail: string;
  rawClassificationJson: string | null;
}
