//! Integer helpers: gcd/lcm, modular inverses, u64 factoring and
//! multiplicative orders.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inv(a: u64, n: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a % n), i128::from(n));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i128::from(n)) as u64)
}

/// Reduces a signed integer into `[0, n)`.
pub fn modulo(x: i128, n: u64) -> u64 {
    x.rem_euclid(i128::from(n)) as u64
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full u64 range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    fn collect(n: u64, out: &mut Vec<u64>) {
        if n == 1 {
            return;
        }
        if is_prime(n) {
            out.push(n);
            return;
        }
        for p in [2u64, 3, 5, 7, 11, 13] {
            if n.is_multiple_of(p) {
                out.push(p);
                collect(n / p, out);
                return;
            }
        }
        let d = pollard_rho(n);
        collect(d, out);
        collect(n / d, out);
    }
    let mut primes = Vec::new();
    collect(n, &mut primes);
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Smallest `m >= 1` with `2^m = 1 (mod n)`; `n` must be odd.
pub fn order_of_two(n: u64) -> Option<u32> {
    if n.is_multiple_of(2) {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    let mut x = 2 % n;
    for m in 1..=64u32 {
        if x == 1 {
            return Some(m);
        }
        x = mul_mod(x, 2, n);
    }
    None
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(mod_inv(3, 7), Some(5));
        assert_eq!(mod_inv(58, 651).map(|i| i * 58 % 651), Some(1));
        assert_eq!(mod_inv(6, 9), None);
    }

    #[test]
    fn factors_of_mersenne_numbers() {
        assert_eq!(factor(63), vec![(3, 2), (7, 1)]);
        assert_eq!(factor((1 << 30) - 1), vec![(3, 2), (7, 1), (11, 1), (31, 1), (151, 1), (331, 1)]);
        let f = factor(u64::MAX);
        assert_eq!(f.iter().map(|(p, _)| *p).collect::<Vec<_>>(), vec![3, 5, 17, 257, 641, 65537, 6700417]);
        let n = (1u64 << 62) - 1;
        let prod: u64 = factor(n).iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(prod, n);
    }

    #[test]
    fn orders() {
        assert_eq!(order_of_two(21), Some(6));
        assert_eq!(order_of_two(651), Some(30));
        assert_eq!(order_of_two(93), Some(10));
        assert_eq!(order_of_two(217), Some(15));
        assert_eq!(order_of_two(8), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
