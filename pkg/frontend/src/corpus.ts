/**
 * Corpus construction through the generator's public command line.
 *
 * Each cell of the factor grid (number of facts x probabilistic proportion
 * x independence-pair count) gets its own config file and one `generate`
 * invocation; the factor levels of every produced program are recorded in
 * corpus.json so aggregation can group by them.
 */

import { execFileSync } from "node:child_process";
import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

export interface CorpusCell {
    facts: number;
    probProportion: number;
    independentPairs: number;
}

export interface CorpusOptions {
    outDir: string;
    programsPerCell: number;
    cells: readonly CorpusCell[];
    seed?: number;
    maxArity?: number;           // predicate arities are [1, maxArity]
    generateCommand?: string;    // default "generate" (on PATH)
}

export interface CorpusEntry {
    file: string;
    facts: number;
    maxArity: number;
    probProportion: number;
    pairProportion: number;
    seed: number;
}

export interface CorpusManifest {
    entries: CorpusEntry[];
}

function cellConfig(cell: CorpusCell, maxArity: number, seed: number,
                    constants: string): string {
    return [
        "predicates = p, q",
        `arities = 1, ${maxArity}`,
        "variables = X, Y",
        "max_nodes = 3",
        "max_clauses = 2",
        "probabilities = 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9",
        "cycle_mode = forbid_negative",
        "forbid_empty_bodies = true",
        cell.independentPairs > 0
            ? `num_independent_pairs = ${cell.independentPairs}` : "",
        `fact_constants = ${constants}`,
        `num_facts = ${cell.facts}`,
        `probabilistic_proportion = ${cell.probProportion}`,
        "emit_query = true",
        `seed = ${seed}`,
    ].filter(line => line !== "").join("\n") + "\n";
}

/** Enough constants that the largest cell stays under 75% of the possible
 * ground atoms. */
function constantPool(maxFacts: number, maxArity: number): string {
    let n = 4;
    const capacity = (c: number) => {
        let total = 0;
        for (const arity of [1, maxArity]) total += c ** arity;
        return total;
    };
    while (maxFacts > 0.75 * capacity(n)) n++;
    return Array.from({ length: n }, (_, i) => `c${i}`).join(", ");
}

export function buildCorpus(options: CorpusOptions): CorpusManifest {
    const command = options.generateCommand ?? "generate";
    const seed = options.seed ?? 0;
    const maxArity = options.maxArity ?? 2;
    const maxFacts = Math.max(...options.cells.map(c => c.facts));
    const constants = constantPool(maxFacts, maxArity);
    mkdirSync(options.outDir, { recursive: true });
    const entries: CorpusEntry[] = [];
    options.cells.forEach((cell, index) => {
        const cellName = `cell_${index}`;
        const cellDir = join(options.outDir, cellName);
        mkdirSync(cellDir, { recursive: true });
        const cellSeed = seed * 1000 + index;
        const configPath = join(cellDir, "config.txt");
        writeFileSync(configPath, cellConfig(cell, maxArity, cellSeed, constants));
        execFileSync(command, [
            "--config", configPath, "--mode", "sample",
            "--seed", String(cellSeed), "--out", cellDir,
            "--count", String(options.programsPerCell),
        ], { stdio: ["ignore", "ignore", "inherit"] });
        const manifest = JSON.parse(
            readFileSync(join(cellDir, "manifest.json"), "utf8"));
        for (const record of manifest.programs) {
            if (record.status !== "ok") continue;
            entries.push({
                file: `${cellName}/${record.file}`,
                facts: cell.facts,
                maxArity,
                probProportion: cell.probProportion,
                pairProportion: cell.independentPairs,
                seed: cellSeed,
            });
        }
    });
    const corpus: CorpusManifest = { entries };
    writeFileSync(join(options.outDir, "corpus.json"),
                  JSON.stringify(corpus, null, 2) + "\n");
    return corpus;
}

export function readCorpus(corpusDir: string): CorpusManifest {
    return JSON.parse(readFileSync(join(corpusDir, "corpus.json"), "utf8"));
}
