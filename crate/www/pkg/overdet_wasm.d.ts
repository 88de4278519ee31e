/* tslint:disable */
/* eslint-disable */

/**
 * Full analysis of a system in the text format. Omega sampling is kept
 * small so the page stays responsive.
 */
export function analyze_system(source: string, seed: bigint, samples: number, omega: boolean, query_dims: BigInt64Array): string;

/**
 * Plain text rendering of the same report.
 */
export function analyze_system_text(source: string, seed: bigint): string;

/**
 * `[{name, description, source}, ...]`
 */
export function catalog(): string;

export function catalog_text(name: string): string | undefined;

/**
 * Partition and telescoping checks on `segment` or `triangle`.
 */
export function flag_cover(name: string, seed: bigint): string;

/**
 * Radius bookkeeping for `b = c^{m+1}`; `c` is a rational like `1/8`.
 */
export function radius_chain(m: number, d: number, c: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze_system: (a: number, b: number, c: bigint, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly analyze_system_text: (a: number, b: number, c: bigint) => [number, number, number, number];
    readonly catalog: () => [number, number];
    readonly catalog_text: (a: number, b: number) => [number, number];
    readonly flag_cover: (a: number, b: number, c: bigint) => [number, number, number, number];
    readonly radius_chain: (a: number, b: number, c: number, d: number) => [number, number, number, number];
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
