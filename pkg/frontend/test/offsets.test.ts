import { describe, expect, it } from "vitest";

import { cpLength, cpToUnits, sliceByCp, unitsToCp } from "../src/offsets";

// independent oracle: code point slicing via Array.from
const cpSlice = (s: string, a: number, b: number) => Array.from(s).slice(a, b).join("");

describe("offset conversion", () => {
  it("is the identity on BMP-only text", () => {
    const text = "ذهب الولد إلى المدرسة.";
    for (let i = 0; i <= text.length; i += 1) {
      expect(cpToUnits(text, i)).toBe(i);
      expect(unitsToCp(text, i)).toBe(i);
    }
  });

  it("accounts for astral characters taking two units", () => {
    const text = "ab\u{10348}cd"; // 𐍈 needs a surrogate pair
    expect(cpLength(text)).toBe(5);
    expect(text.length).toBe(6);
    expect(cpToUnits(text, 2)).toBe(2); // start of 𐍈
    expect(cpToUnits(text, 3)).toBe(4); // 'c' shifted by the pair
    expect(cpToUnits(text, 5)).toBe(6); // end of string
    expect(unitsToCp(text, 4)).toBe(3);
    expect(unitsToCp(text, 6)).toBe(5);
  });

  it("slices by code points exactly like the independent oracle", () => {
    const text = "قال 😊 ثم 𐍈 ذهب";
    for (let a = 0; a <= cpLength(text); a += 1) {
      for (let b = a; b <= cpLength(text); b += 1) {
        expect(sliceByCp(text, a, b)).toBe(cpSlice(text, a, b));
      }
    }
  });

  it("round-trips every boundary of a mixed-script string", () => {
    const text = "word كلمة 🚀 mixé 𐍈 نهاية";
    const n = cpLength(text);
    for (let cp = 0; cp <= n; cp += 1) {
      expect(unitsToCp(text, cpToUnits(text, cp))).toBe(cp);
    }
  });

  it("rejects offsets that cannot be converted", () => {
    const text = "a\u{1F600}b";
    expect(() => cpToUnits(text, -1)).toThrow(RangeError);
    expect(() => cpToUnits(text, 4)).toThrow(RangeError);
    expect(() => unitsToCp(text, 2)).toThrow(RangeError); // inside the pair
    expect(() => unitsToCp(text, 9)).toThrow(RangeError);
  });
});
