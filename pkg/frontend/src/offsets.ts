// Scalar <-> display offset conversion.
//
// The service counts string positions in Unicode code points (scalars).
// JavaScript strings index UTF-16 code units, where astral characters
// occupy two units. Every span that crosses this file leaves in display
// units; nothing outside this module converts offsets.

/** Number of code points in the string. */
export function cpLength(text: string): number {
  let n = 0;
  for (const _ch of text) n += 1;
  return n;
}

/** Convert a code point index to a UTF-16 unit index. */
export function cpToUnits(text: string, cpIndex: number): number {
  if (cpIndex < 0) throw new RangeError(`negative offset ${cpIndex}`);
  let units = 0;
  let cps = 0;
  for (const ch of text) {
    if (cps === cpIndex) return units;
    units += ch.length;
    cps += 1;
  }
  if (cps === cpIndex) return units;
  throw new RangeError(`offset ${cpIndex} beyond end of text (${cps} code points)`);
}

/** Convert a UTF-16 unit index back to a code point index. */
export function unitsToCp(text: string, unitIndex: number): number {
  if (unitIndex < 0) throw new RangeError(`negative offset ${unitIndex}`);
  let units = 0;
  let cps = 0;
  for (const ch of text) {
    if (units === unitIndex) return cps;
    if (units > unitIndex) {
      // landed inside a surrogate pair
      throw new RangeError(`offset ${unitIndex} splits a surrogate pair`);
    }
    units += ch.length;
    cps += 1;
  }
  if (units === unitIndex) return cps;
  throw new RangeError(`offset ${unitIndex} beyond end of text (${units} units)`);
}

/** Slice by code point offsets, mirroring the service's indexing. */
export function sliceByCp(text: string, cpStart: number, cpEnd: number): string {
  return text.slice(cpToUnits(text, cpStart), cpToUnits(text, cpEnd));
}
