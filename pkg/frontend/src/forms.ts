/** Add-record form logic: local validation (no request on empty input),
 * file-to-base64 conversion, and inline error reporting. */

import { ApiClient, ApiError } from "./api.js";
import type { PatientRecord } from "./types.js";

export interface SubmitResult {
  ok: boolean;
  record?: PatientRecord;
  fieldError?: string;
}

export async function submitRecord(
  api: ApiClient,
  input: { patientName: string; text?: string; imageBase64?: string },
): Promise<SubmitResult> {
  if (!input.patientName.trim()) {
    return { ok: false, fieldError: "Patient name is required." };
  }
  const hasText = input.text !== undefined && input.text.trim() !== "";
  const hasImage = input.imageBase64 !== undefined && input.imageBase64 !== "";
  if (!hasText && !hasImage) {
    return { ok: false, fieldError: "Paste report text or choose an image." };
  }
  try {
    const record = await api.createRecord(input.patientName.trim(), {
      text: hasText ? input.text : undefined,
      imageBase64: hasImage ? input.imageBase64 : undefined,
    });
    return { ok: true, record };
  } catch (error) {
    if (error instanceof ApiError) {
      return { ok: false, fieldError: error.message };
    }
    throw error;
  }
}

export function fileToBase64(file: File): Promise<string> {
  return new Promise((resolve, reject) => {
    const reader = new FileReader();
    reader.onerror = () => reject(reader.error);
    reader.onload = () => {
      const dataUrl = reader.result as string;
      resolve(dataUrl.slice(dataUrl.indexOf(",") + 1));
    };
    reader.readAsDataURL(file);
  });
}
