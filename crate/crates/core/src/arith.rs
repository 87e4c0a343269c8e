//! Small integer number theory used throughout: totients, Möbius, factoring,
//! Jacobi symbols, modular inverses.

use num_integer::Integer;

/// Prime factorisation by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Writes `n = s² · f` with `f` squarefree; returns `(s, f)`.
pub fn square_free_split(n: u64) -> (u64, u64) {
    let mut s = 1;
    let mut f = 1;
    for (p, e) in factorize(n) {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
    }
    (s, f)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Canonical representative of `a mod n` in `[0, n)`.
pub fn modulo(a: i64, n: u64) -> u64 {
    a.rem_euclid(n as i64) as u64
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn mod_inverse(a: i64, n: u64) -> Option<u64> {
    let n = n as i64;
    let g = a.rem_euclid(n).extended_gcd(&n);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(n) as u64)
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
///
/// Panics if `n` is even or non-positive.
pub fn jacobi_symbol(a: i64, n: i64) -> i32 {
    assert!(
        n > 0 && n % 2 == 1,
        "Jacobi symbol needs odd positive modulus, got {n}"
    );
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Residues in `[1, n]` coprime to `n`, increasing.
pub fn units(n: u64) -> Vec<u64> {
    (1..=n).filter(|j| j.gcd(&n) == 1).collect()
}
