/**
 * Benchmark runner: the (program, algorithm) matrix as isolated
 * subprocesses with a hard kill at the timeout.
 *
 * Programs are read, never written. Rows are collected from a bounded
 * worker pool and appended to the results file in a deterministic order by
 * a single writer.
 */

import { spawn } from "node:child_process";
import { readdirSync, statSync } from "node:fs";
import { join } from "node:path";

import { Backend, instantiate, extractProbability } from "./backends.js";
import { ResultRow, appendRows } from "./csv.js";

export interface RunOptions {
    timeoutSeconds?: number;     // default 60
    concurrency?: number;        // default 4
}

export function corpusPrograms(corpusDir: string): string[] {
    const out: string[] = [];
    const walk = (dir: string, prefix: string) => {
        for (const entry of readdirSync(dir).sort()) {
            const full = join(dir, entry);
            const rel = prefix ? `${prefix}/${entry}` : entry;
            if (statSync(full).isDirectory()) {
                walk(full, rel);
            } else if (/^program_\d+\.pl$/.test(entry)) {
                out.push(rel);
            }
        }
    };
    walk(corpusDir, "");
    return out;
}

interface Execution {
    status: "ok" | "timeout" | "error";
    seconds: number;
    stdout: string;
}

function execute(argv: string[], timeoutSeconds: number): Promise<Execution> {
    return new Promise(resolve => {
        const start = process.hrtime.bigint();
        const elapsed = () => Number(process.hrtime.bigint() - start) / 1e9;
        let child;
        try {
            child = spawn(argv[0], argv.slice(1), { stdio: ["ignore", "pipe", "ignore"] });
        } catch {
            resolve({ status: "error", seconds: 0, stdout: "" });
            return;
        }
        let stdout = "";
        let settled = false;
        const finish = (status: Execution["status"]) => {
            if (!settled) {
                settled = true;
                clearTimeout(killer);
                resolve({ status, seconds: elapsed(), stdout });
            }
        };
        const killer = setTimeout(() => {
            child.kill("SIGKILL");
            finish("timeout");
        }, timeoutSeconds * 1000);
        child.stdout.on("data", chunk => { stdout += chunk; });
        child.on("error", () => finish("error"));
        child.on("close", code => finish(code === 0 ? "ok" : "error"));
    });
}

/**
 * Run every backend over every program of the corpus; return the rows and
 * append them (sorted by program then algorithm) to resultsPath when given.
 */
export async function runBenchmark(
    corpusDir: string,
    backends: readonly Backend[],
    options: RunOptions = {},
    resultsPath?: string,
): Promise<ResultRow[]> {
    const timeoutSeconds = options.timeoutSeconds ?? 60;
    const concurrency = Math.max(1, options.concurrency ?? 4);
    const programs = corpusPrograms(corpusDir);
    const tasks: { programId: string; backend: Backend }[] = [];
    for (const programId of programs) {
        for (const backend of backends) {
            tasks.push({ programId, backend });
        }
    }
    const rows: ResultRow[] = [];
    let next = 0;
    const worker = async () => {
        while (next < tasks.length) {
            const task = tasks[next++];
            const argv = instantiate(task.backend, join(corpusDir, task.programId));
            const result = await execute(argv, timeoutSeconds);
            const probability = result.status === "ok"
                ? extractProbability(result.stdout) : null;
            rows.push({
                programId: task.programId,
                algorithm: task.backend.name,
                status: result.status === "ok" && probability === null
                    ? "error" : result.status,
                seconds: result.seconds,
                probability: result.status === "ok" ? probability : null,
            });
        }
    };
    await Promise.all(Array.from({ length: concurrency }, worker));
    rows.sort((a, b) => a.programId === b.programId
        ? a.algorithm.localeCompare(b.algorithm)
        : a.programId.localeCompare(b.programId));
    if (resultsPath) {
        appendRows(resultsPath, rows);
    }
    return rows;
}
