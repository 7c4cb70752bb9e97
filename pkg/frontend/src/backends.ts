/**
 * Inference backend registry.
 *
 * A backend is a named command template; `{program}` is replaced by the
 * program file path. The default set covers the six ProbLog evaluation
 * strategies and knowledge-compilation targets; a missing executable is not
 * fatal (the runner records an error row and continues). Custom backends
 * are given as "name=cmd arg1 arg2 ..." specs, which is also how the test
 * suite plugs in its stub evaluators.
 */

export interface Backend {
    name: string;
    /** argv template; one entry must be the literal "{program}" */
    command: readonly string[];
}

const PROBLOG_KINDS: readonly [string, string][] = [
    ["bdd", "bdd"],
    ["nnf", "nnf"],
    ["ddnnf", "ddnnf"],
    ["kbest", "kbest"],
    ["sdd", "sdd"],
    ["sddx", "sddx"],
];

export function problogBackends(): Backend[] {
    return PROBLOG_KINDS.map(([name, kind]) => ({
        name,
        command: ["problog", "{program}", "-k", kind],
    }));
}

export function parseBackendSpec(spec: string): Backend {
    const eq = spec.indexOf("=");
    if (eq <= 0 || eq === spec.length - 1) {
        throw new Error(`backend spec must look like name=command..., got ${spec!}`);
    }
    const name = spec.slice(0, eq).trim();
    const command = spec.slice(eq + 1).trim().split(/\s+/);
    if (!command.includes("{program}")) {
        command.push("{program}");
    }
    return { name, command };
}

export function instantiate(backend: Backend, programPath: string): string[] {
    return backend.command.map(part =>
        part === "{program}" ? programPath : part);
}

/**
 * The harness reads the query probability as the last floating-point token
 * on the backend's standard output (ProbLog prints `<query atom>: <prob>`).
 */
export function extractProbability(stdout: string): number | null {
    const matches = stdout.match(/-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?/g);
    if (!matches || matches.length === 0) return null;
    const value = Number(matches[matches.length - 1]);
    return Number.isNaN(value) ? null : value;
}
