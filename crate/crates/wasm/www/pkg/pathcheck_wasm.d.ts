/* tslint:disable */
/* eslint-disable */

/**
 * Result of checking one formula against one trace with both engines.
 */
export class CheckReport {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    gates_built: number;
    leaves: number;
    /**
     * The same from the naive evaluator.
     */
    naive_sequence: string;
    pnf: string;
    satisfied: boolean;
    /**
     * Per-position values from the circuit engine, as a 0/1 string.
     */
    sequence: string;
    stages: number;
}

export function check_formula(formula: string, trace: string, format: string): CheckReport;

export function circuit_dot(op: string, side: string, seq: string, evaluated: boolean): string;

export function circuit_svg(op: string, side: string, seq: string, evaluated: boolean): string;

export function contraction_schedule(formula: string, trace: string, format: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_checkreport_free: (a: number, b: number) => void;
    readonly __wbg_get_checkreport_gates_built: (a: number) => number;
    readonly __wbg_get_checkreport_leaves: (a: number) => number;
    readonly __wbg_get_checkreport_naive_sequence: (a: number) => [number, number];
    readonly __wbg_get_checkreport_pnf: (a: number) => [number, number];
    readonly __wbg_get_checkreport_satisfied: (a: number) => number;
    readonly __wbg_get_checkreport_sequence: (a: number) => [number, number];
    readonly __wbg_get_checkreport_stages: (a: number) => number;
    readonly __wbg_set_checkreport_gates_built: (a: number, b: number) => void;
    readonly __wbg_set_checkreport_leaves: (a: number, b: number) => void;
    readonly __wbg_set_checkreport_naive_sequence: (a: number, b: number, c: number) => void;
    readonly __wbg_set_checkreport_pnf: (a: number, b: number, c: number) => void;
    readonly __wbg_set_checkreport_satisfied: (a: number, b: number) => void;
    readonly __wbg_set_checkreport_sequence: (a: number, b: number, c: number) => void;
    readonly __wbg_set_checkreport_stages: (a: number, b: number) => void;
    readonly check_formula: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly circuit_dot: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly circuit_svg: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly contraction_schedule: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
