import { describe, expect, it } from "vitest";

import { Rational, ratio } from "../src/rational.js";

describe("Rational", () => {
  it("normalizes sign and lowest terms", () => {
    expect(new Rational(-6n, -8n).toString()).toBe("3/4");
    expect(new Rational(6n, -8n).toString()).toBe("-3/4");
    expect(new Rational(0n, 5n).toString()).toBe("0");
  });

  it("parses integers, fractions and exact decimals", () => {
    expect(Rational.parse("99/100").toString()).toBe("99/100");
    expect(Rational.parse("0.99").toString()).toBe("99/100");
    expect(Rational.parse("-0.5").toString()).toBe("-1/2");
    expect(Rational.parse("  7 ").toString()).toBe("7");
    expect(() => Rational.parse("x")).toThrow();
    expect(() => Rational.parse("1/0")).toThrow();
  });

  it("does exact arithmetic", () => {
    const half = ratio(1, 2);
    expect(half.add(half).eq(Rational.one)).toBe(true);
    const lb = Rational.parse("99/100").mul(ratio(5)).add(Rational.parse("1/100").mul(ratio(3)));
    expect(lb.toString()).toBe("249/50");
    expect(Rational.parse("393/98").cmp(ratio(4))).toBe(1);
  });

  it("round-trips through toString", () => {
    for (const text of ["5", "-3/7", "249/50", "0"]) {
      expect(Rational.parse(text).toString()).toBe(text);
    }
  });
});
