/* tslint:disable */
/* eslint-disable */

/**
 * Exact f-vectors of levels `0..=depth`, as decimal strings.
 */
export function fvector_json(family: string, depth: number): string;

/**
 * Laplacian spectrum of a family after `level` refinements, plus the
 * sup distance to `4 sin^2(pi x / 2)` on `[0.05, 0.95]` for graphs of
 * dimension one.
 */
export function profile_json(family: string, level: number): string;

/**
 * Checks that `4K - K^2` on `C_2n` splits into two copies of `L(C_n)`.
 */
export function renormalization_json(n: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly fvector_json: (a: number, b: number, c: number) => [number, number];
    readonly profile_json: (a: number, b: number, c: number) => [number, number];
    readonly renormalization_json: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
