/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const analyze_system: (a: number, b: number, c: bigint, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const analyze_system_text: (a: number, b: number, c: bigint) => [number, number, number, number];
export const catalog: () => [number, number];
export const catalog_text: (a: number, b: number) => [number, number];
export const flag_cover: (a: number, b: number, c: bigint) => [number, number, number, number];
export const radius_chain: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
