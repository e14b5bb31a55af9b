import { describe, expect, it } from "vitest";

import { chrome, toggleLocale, type MessageKey } from "../src/locale";

describe("chrome", () => {
  it("gives Arabic chrome a right-to-left direction", () => {
    expect(chrome("ar").dir).toBe("rtl");
  });

  it("gives English chrome a left-to-right direction", () => {
    expect(chrome("en").dir).toBe("ltr");
  });

  it("toggling flips the direction both ways", () => {
    expect(chrome(toggleLocale("ar")).dir).toBe("ltr");
    expect(chrome(toggleLocale("en")).dir).toBe("rtl");
    expect(toggleLocale(toggleLocale("ar"))).toBe("ar");
  });

  it("provides every message in both languages", () => {
    const ar = chrome("ar").strings;
    const en = chrome("en").strings;
    for (const key of Object.keys(ar) as MessageKey[]) {
      expect(ar[key].length).toBeGreaterThan(0);
      expect(en[key].length).toBeGreaterThan(0);
    }
    expect(Object.keys(ar)).toEqual(Object.keys(en));
  });

  it("actually translates the chrome", () => {
    const ar = chrome("ar").strings;
    const en = chrome("en").strings;
    expect(ar.check).not.toBe(en.check);
    expect(ar.prompts).not.toBe(en.prompts);
    expect(ar.progress).not.toBe(en.progress);
  });

  it("labels the toggle with the other language's name", () => {
    expect(chrome("ar").strings.switchLocale).toBe("English");
    expect(chrome("en").strings.switchLocale).toBe("العربية");
  });
});
