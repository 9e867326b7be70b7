//! Dense linear solving for the decomposition prober. Elimination runs
//! modulo 62-bit primes, solutions are lifted by CRT and turned back into
//! rationals by lattice reduction; the caller re-verifies any candidate
//! with exact arithmetic, so nothing here is trusted for correctness
//! claims, only for finding candidates fast.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime p, via Fermat.
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin: the first twelve prime bases decide
/// primality for every u64.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &b in &BASES {
        let mut x = powmod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// First `count` primes at or above `start`.
pub(crate) fn primes_from(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    if start <= 2 && count > 0 {
        out.push(2);
    }
    let mut n = start.max(3) | 1;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(n);
        }
        n += 2;
    }
    out
}

pub(crate) enum SolveOutcome {
    /// Particular solution with every free variable set to zero, together
    /// with the pivot columns of the reduced system.
    Solution {
        values: Vec<u64>,
        pivot_cols: Vec<usize>,
    },
    Inconsistent,
}

/// Row-reduce the augmented matrix (n_cols coefficient columns plus one
/// right-hand-side column) over F_p.
pub(crate) fn solve_mod_p(mut mat: Vec<Vec<u64>>, n_cols: usize, p: u64) -> SolveOutcome {
    let n_rows = mat.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(pr) = (r..n_rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = invmod(mat[r][c], p);
        for j in c..=n_cols {
            mat[r][j] = mulmod(mat[r][j], inv, p);
        }
        for i in 0..n_rows {
            if i != r && mat[i][c] != 0 {
                let f = mat[i][c];
                for j in c..=n_cols {
                    let delta = mulmod(f, mat[r][j], p);
                    mat[i][j] = submod(mat[i][j], delta, p);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    // Every coefficient entry below row r is zero (any nonzero one would
    // have become a pivot), so a nonzero rhs there is a contradiction.
    if mat[r..].iter().any(|row| row[n_cols] != 0) {
        return SolveOutcome::Inconsistent;
    }
    let mut values = vec![0u64; n_cols];
    for (idx, &c) in pivot_cols.iter().enumerate() {
        values[c] = mat[idx][n_cols];
    }
    SolveOutcome::Solution { values, pivot_cols }
}

/// Residue of a big integer in [0, p).
pub(crate) fn bigint_mod_p(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// x ≡ r1 (mod m1), x ≡ r2 (mod m2) with m2 prime and coprime to m1;
/// result is in [0, m1·m2).
pub(crate) fn crt_combine(r1: &BigInt, m1: &BigInt, r2: u64, m2: u64) -> BigInt {
    let m2b = BigInt::from(m2);
    let diff = (BigInt::from(r2) - r1).mod_floor(&m2b);
    let inv = m1.modpow(&(&m2b - 2), &m2b);
    let t = (diff * inv).mod_floor(&m2b);
    r1 + m1 * t
}

/// Wang rational reconstruction: the unique n/d with |n|, d ≤ √(m/2) and
/// n ≡ c·d (mod m), if one exists.
pub(crate) fn rational_reconstruct(c: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u8).sqrt();
    let mut r0 = m.clone();
    let mut r1 = c.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = r1;
        r1 = r2;
        let t2 = &t0 - &q * &t1;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() {
        return None;
    }
    let (num, den) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if den > bound || num.gcd(&den) != BigInt::one() {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_on_known_values() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64((1 << 61) + 1)); // 3 · 768614336404564651
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn primes_from_start_are_prime_and_ordered() {
        let ps = primes_from(1 << 62, 4);
        assert_eq!(ps.len(), 4);
        for w in ps.windows(2) {
            assert!(w[0] < w[1]);
        }
        for &p in &ps {
            assert!(is_prime_u64(p));
            assert!(p > 1 << 62);
        }
    }

    #[test]
    fn solve_small_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1.
        let p = 1_000_000_007u64;
        let mat = vec![vec![1, 1, 3], vec![1, p - 1, 1]];
        match solve_mod_p(mat, 2, p) {
            SolveOutcome::Solution { values, pivot_cols } => {
                assert_eq!(values, vec![2, 1]);
                assert_eq!(pivot_cols, vec![0, 1]);
            }
            SolveOutcome::Inconsistent => panic!("system is consistent"),
        }
    }

    #[test]
    fn underdetermined_system_zeroes_free_variables() {
        // x + 2y = 5 alone: pivot on x, y free, so x = 5, y = 0.
        let p = 1_000_000_007u64;
        let mat = vec![vec![1, 2, 5]];
        match solve_mod_p(mat, 2, p) {
            SolveOutcome::Solution { values, pivot_cols } => {
                assert_eq!(values, vec![5, 0]);
                assert_eq!(pivot_cols, vec![0]);
            }
            SolveOutcome::Inconsistent => panic!("system is consistent"),
        }
    }

    #[test]
    fn inconsistent_system_is_flagged() {
        let p = 97u64;
        let mat = vec![vec![1, 1, 1], vec![1, 1, 2]];
        assert!(matches!(
            solve_mod_p(mat, 2, p),
            SolveOutcome::Inconsistent
        ));
    }

    #[test]
    fn crt_reassembles_a_value() {
        let (p1, p2) = (1_000_000_007u64, 1_000_000_009u64);
        let v = BigInt::from(123_456_789_012_345i64);
        let r1 = v.mod_floor(&BigInt::from(p1));
        let combined = crt_combine(&r1, &BigInt::from(p1), bigint_mod_p(&v, p2), p2);
        assert_eq!(combined, v);
    }

    #[test]
    fn reconstructs_small_rationals() {
        let p1 = primes_from(1 << 62, 2);
        let m = BigInt::from(p1[0]) * BigInt::from(p1[1]);
        for (n, d) in [(-3i64, 7u64), (22, 1), (0, 1), (-1, 12)] {
            // Build c ≡ n/d (mod m) through the prime factors.
            let c1 = mulmod(
                bigint_mod_p(&BigInt::from(n), p1[0]),
                invmod(d % p1[0], p1[0]),
                p1[0],
            );
            let c2 = mulmod(
                bigint_mod_p(&BigInt::from(n), p1[1]),
                invmod(d % p1[1], p1[1]),
                p1[1],
            );
            let c = crt_combine(&BigInt::from(c1), &BigInt::from(p1[0]), c2, p1[1]);
            let rec = rational_reconstruct(&c, &m).unwrap();
            assert_eq!(rec, BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
    }
}
