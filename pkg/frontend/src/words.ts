/**
 * 64-bit words on the wire.
 *
 * The service sends and accepts u64 values as decimal strings so that
 * nothing is ever squeezed through a JS double. On this side they are
 * bigint; these helpers convert and range-check.
 */

const U64_MAX = (1n << 64n) - 1n;

export type WordInput = bigint | number | string;

export function wordToString(w: WordInput): string {
  const v = typeof w === 'bigint' ? w : BigInt(w);
  if (v < 0n || v > U64_MAX) {
    throw new RangeError(`not a 64-bit word: ${w}`);
  }
  return v.toString(10);
}

export function wordFromString(s: string): bigint {
  const v = BigInt(s);
  if (v < 0n || v > U64_MAX) {
    throw new RangeError(`not a 64-bit word: ${s}`);
  }
  return v;
}

/** Little-endian f64 buffer to numbers (exact; no reencoding). */
export function f64FromBytes(bytes: Uint8Array): number[] {
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  const out: number[] = [];
  for (let i = 0; i + 8 <= bytes.byteLength; i += 8) {
    out.push(view.getFloat64(i, true));
  }
  return out;
}

/** Little-endian f32 buffer to numbers. */
export function f32FromBytes(bytes: Uint8Array): number[] {
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  const out: number[] = [];
  for (let i = 0; i + 4 <= bytes.byteLength; i += 4) {
    out.push(view.getFloat32(i, true));
  }
  return out;
}

/** Little-endian u64 buffer to bigints. */
export function u64FromBytes(bytes: Uint8Array): bigint[] {
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  const out: bigint[] = [];
  for (let i = 0; i + 8 <= bytes.byteLength; i += 8) {
    out.push(view.getBigUint64(i, true));
  }
  return out;
}

/** IEEE-754 bit pattern of a double, for bit-for-bit comparisons. */
export function doubleBits(x: number): bigint {
  const buf = new ArrayBuffer(8);
  new DataView(buf).setFloat64(0, x, true);
  return new DataView(buf).getBigUint64(0, true);
}

/** IEEE-754 bit pattern of a float32. */
export function floatBits(x: number): number {
  const buf = new ArrayBuffer(4);
  new DataView(buf).setFloat32(0, x, true);
  return new DataView(buf).getUint32(0, true);
}
