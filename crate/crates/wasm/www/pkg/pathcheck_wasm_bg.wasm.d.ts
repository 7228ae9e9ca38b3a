/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_checkreport_free: (a: number, b: number) => void;
export const __wbg_get_checkreport_gates_built: (a: number) => number;
export const __wbg_get_checkreport_leaves: (a: number) => number;
export const __wbg_get_checkreport_naive_sequence: (a: number) => [number, number];
export const __wbg_get_checkreport_pnf: (a: number) => [number, number];
export const __wbg_get_checkreport_satisfied: (a: number) => number;
export const __wbg_get_checkreport_sequence: (a: number) => [number, number];
export const __wbg_get_checkreport_stages: (a: number) => number;
export const __wbg_set_checkreport_gates_built: (a: number, b: number) => void;
export const __wbg_set_checkreport_leaves: (a: number, b: number) => void;
export const __wbg_set_checkreport_naive_sequence: (a: number, b: number, c: number) => void;
export const __wbg_set_checkreport_pnf: (a: number, b: number, c: number) => void;
export const __wbg_set_checkreport_satisfied: (a: number, b: number) => void;
export const __wbg_set_checkreport_sequence: (a: number, b: number, c: number) => void;
export const __wbg_set_checkreport_stages: (a: number, b: number) => void;
export const check_formula: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const circuit_dot: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const circuit_svg: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const contraction_schedule: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
