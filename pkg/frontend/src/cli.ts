#!/usr/bin/env node
/**
 * genlp-bench <corpus|run|aggregate> [options]
 *
 * corpus    --out DIR --per-cell N [--facts 100,1000] [--proportions 0.5]
 *           [--pairs 0] [--seed N] [--generate CMD]
 * run       --corpus DIR --results FILE [--backend name=cmd...]...
 *           [--timeout SECONDS] [--concurrency N]
 * aggregate --corpus DIR --results FILE --out DIR [--timeout SECONDS]
 */

import { mkdirSync } from "node:fs";

import { problogBackends, parseBackendSpec, Backend } from "./backends.js";
import { readResults } from "./csv.js";
import { buildCorpus, readCorpus, CorpusCell } from "./corpus.js";
import { runBenchmark } from "./runner.js";
import { aggregate, probabilityDisagreements, writeReports } from "./aggregate.js";

interface Args {
    positional: string[];
    options: Map<string, string[]>;
}

function parseArgs(argv: string[]): Args {
    const positional: string[] = [];
    const options = new Map<string, string[]>();
    for (let i = 0; i < argv.length; i++) {
        const arg = argv[i];
        if (arg.startsWith("--")) {
            const key = arg.slice(2);
            const value = argv[++i];
            if (value === undefined) throw new Error(`missing value for --${key}`);
            const list = options.get(key);
            if (list) list.push(value); else options.set(key, [value]);
        } else {
            positional.push(arg);
        }
    }
    return { positional, options };
}

function single(args: Args, key: string, fallback?: string): string {
    const values = args.options.get(key);
    if (!values) {
        if (fallback !== undefined) return fallback;
        throw new Error(`missing required option --${key}`);
    }
    return values[values.length - 1];
}

function numbers(text: string): number[] {
    return text.split(",").map(part => Number(part.trim()));
}

async function main(): Promise<number> {
    const args = parseArgs(process.argv.slice(2));
    const command = args.positional[0];
    if (command === "corpus") {
        const factLevels = numbers(single(args, "facts", "100,1000"));
        const proportions = numbers(single(args, "proportions", "0.5"));
        const pairCounts = numbers(single(args, "pairs", "0"));
        const cells: CorpusCell[] = [];
        for (const facts of factLevels) {
            for (const probProportion of proportions) {
                for (const independentPairs of pairCounts) {
                    cells.push({ facts, probProportion, independentPairs });
                }
            }
        }
        const corpus = buildCorpus({
            outDir: single(args, "out"),
            programsPerCell: Number(single(args, "per-cell", "15")),
            cells,
            seed: Number(single(args, "seed", "0")),
            generateCommand: single(args, "generate", "generate"),
        });
        console.log(`corpus: ${corpus.entries.length} programs`);
        return 0;
    }
    if (command === "run") {
        const specs = args.options.get("backend") ?? [];
        const backends: Backend[] = specs.length
            ? specs.map(parseBackendSpec) : problogBackends();
        const rows = await runBenchmark(
            single(args, "corpus"),
            backends,
            {
                timeoutSeconds: Number(single(args, "timeout", "60")),
                concurrency: Number(single(args, "concurrency", "4")),
            },
            single(args, "results"));
        const ok = rows.filter(r => r.status === "ok").length;
        console.log(`ran ${rows.length} cases (${ok} ok)`);
        return 0;
    }
    if (command === "aggregate") {
        const { rows, warnings } = readResults(single(args, "results"));
        const corpus = readCorpus(single(args, "corpus"));
        const timeout = Number(single(args, "timeout", "60"));
        const summary = aggregate(rows, corpus, timeout, warnings);
        const outDir = single(args, "out");
        mkdirSync(outDir, { recursive: true });
        const written = writeReports(summary, outDir);
        const disagreements = probabilityDisagreements(rows);
        for (const path of written) console.log(path);
        if (warnings) console.log(`warnings: ${warnings} malformed rows skipped`);
        if (disagreements.length) {
            console.error(`probability disagreement on: ${disagreements.join(", ")}`);
            return 3;
        }
        return 0;
    }
    console.error("usage: genlp-bench <corpus|run|aggregate> [options]");
    return 1;
}

main().then(
    code => process.exit(code),
    error => {
        console.error(String(error instanceof Error ? error.message : error));
        process.exit(1);
    });
