/** Exact rational numbers over bigint, mirroring the server's arithmetic. */

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export class Rational {
  readonly num: bigint;
  readonly den: bigint; // always positive, gcd(|num|, den) = 1

  constructor(num: bigint, den: bigint = 1n) {
    if (den === 0n) throw new Error("division by zero");
    if (den < 0n) {
      num = -num;
      den = -den;
    }
    const g = gcd(num, den) || 1n;
    this.num = num / g;
    this.den = den / g;
  }

  static zero = new Rational(0n);
  static one = new Rational(1n);

  static fromInt(value: number): Rational {
    if (!Number.isInteger(value)) throw new Error(`not an integer: ${value}`);
    return new Rational(BigInt(value));
  }

  /** Parses "3", "-4/7" and exact decimals like "0.99". */
  static parse(text: string): Rational {
    const token = text.trim();
    let m = /^([+-]?\d+)\/(\d+)$/.exec(token);
    if (m) return new Rational(BigInt(m[1]), BigInt(m[2]));
    m = /^([+-]?)(\d*)\.(\d+)$/.exec(token);
    if (m) {
      const sign = m[1] === "-" ? -1n : 1n;
      const whole = BigInt(m[2] || "0");
      const frac = BigInt(m[3]);
      const scale = 10n ** BigInt(m[3].length);
      return new Rational(sign * (whole * scale + frac), scale);
    }
    if (/^[+-]?\d+$/.test(token)) return new Rational(BigInt(token));
    throw new Error(`not a rational number: ${text}`);
  }

  add(other: Rational): Rational {
    return new Rational(this.num * other.den + other.num * this.den, this.den * other.den);
  }

  sub(other: Rational): Rational {
    return new Rational(this.num * other.den - other.num * this.den, this.den * other.den);
  }

  mul(other: Rational): Rational {
    return new Rational(this.num * other.num, this.den * other.den);
  }

  div(other: Rational): Rational {
    if (other.num === 0n) throw new Error("division by zero");
    return new Rational(this.num * other.den, this.den * other.num);
  }

  neg(): Rational {
    return new Rational(-this.num, this.den);
  }

  eq(other: Rational): boolean {
    return this.num === other.num && this.den === other.den;
  }

  cmp(other: Rational): number {
    const lhs = this.num * other.den;
    const rhs = other.num * this.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
  }

  isZero(): boolean {
    return this.num === 0n;
  }

  toString(): string {
    return this.den === 1n ? this.num.toString() : `${this.num}/${this.den}`;
  }

  toNumber(): number {
    return Number(this.num) / Number(this.den);
  }
}

export function ratio(num: number, den = 1): Rational {
  return new Rational(BigInt(num), BigInt(den));
}

export function sum(values: Rational[]): Rational {
  return values.reduce((a, b) => a.add(b), Rational.zero);
}
