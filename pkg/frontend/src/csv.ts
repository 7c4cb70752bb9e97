/**
 * Result table schema and CSV plumbing.
 *
 * One row per (program, algorithm) run:
 *   program_id, algorithm, status, seconds, probability
 * status is ok | timeout | error; probability is empty unless ok.
 * Result files are append-only: re-running a benchmark adds rows, it never
 * rewrites existing ones.
 */

import { appendFileSync, existsSync, readFileSync, writeFileSync } from "node:fs";

export type RunStatus = "ok" | "timeout" | "error";

export interface ResultRow {
    programId: string;
    algorithm: string;
    status: RunStatus;
    seconds: number;
    probability: number | null;
}

export const CSV_HEADER = "program_id,algorithm,status,seconds,probability";

export function formatRow(row: ResultRow): string {
    const prob = row.probability === null ? "" : String(row.probability);
    return [row.programId, row.algorithm, row.status,
            row.seconds.toFixed(6), prob].join(",");
}

/** Append rows, creating the file (with header) on first use. */
export function appendRows(path: string, rows: readonly ResultRow[]): void {
    const lines = rows.map(formatRow).join("\n");
    if (!existsSync(path)) {
        writeFileSync(path, CSV_HEADER + "\n" + (rows.length ? lines + "\n" : ""));
        return;
    }
    if (rows.length) {
        appendFileSync(path, lines + "\n");
    }
}

export interface ParsedResults {
    rows: ResultRow[];
    /** malformed lines skipped while reading */
    warnings: number;
}

export function parseResults(text: string): ParsedResults {
    const rows: ResultRow[] = [];
    let warnings = 0;
    const lines = text.split("\n");
    for (let i = 0; i < lines.length; i++) {
        const line = lines[i].trim();
        if (!line || line === CSV_HEADER) continue;
        const parts = line.split(",");
        if (parts.length !== 5) {
            warnings++;
            continue;
        }
        const [programId, algorithm, status, secondsText, probText] = parts;
        const seconds = Number(secondsText);
        if (!programId || !algorithm || Number.isNaN(seconds)
            || (status !== "ok" && status !== "timeout" && status !== "error")) {
            warnings++;
            continue;
        }
        const probability = probText === "" ? null : Number(probText);
        if (status === "ok" && (probability === null || Number.isNaN(probability))) {
            warnings++;
            continue;
        }
        rows.push({ programId, algorithm, status: status as RunStatus,
                    seconds, probability });
    }
    return { rows, warnings };
}

export function readResults(path: string): ParsedResults {
    return parseResults(readFileSync(path, "utf8"));
}
