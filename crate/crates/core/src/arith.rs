//! Word-size number theory: modular arithmetic, primality and trial-division factoring.

use alloc::vec::Vec;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime `p`; `a` must be nonzero mod `p`.
pub fn inv_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
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
    'witness: for &a in &WITNESSES {
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

/// Prime factorization by trial division, ascending primes with exponents.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    // 6k +- 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A square root of -1 modulo a prime `p = 1 mod 4`.
pub fn sqrt_neg_one(p: u64) -> u64 {
    debug_assert!(p % 4 == 1);
    let mut c = 2u64;
    loop {
        if pow_mod(c, (p - 1) / 2, p) == p - 1 {
            return pow_mod(c, (p - 1) / 4, p);
        }
        c += 1;
    }
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Positive divisors in ascending order.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut divs = alloc::vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Table of 62-bit primes `p = 1 mod 4` with a square root of -1, used by the
/// modular polynomial gcd.
pub(crate) const SPLIT_PRIMES: &[(u64, u64)] = &[
    (4611686018427387817, 120863620846201794),
    (4611686018427387761, 1130501565556633554),
    (4611686018427387737, 445087375101645770),
    (4611686018427387733, 678134394580861710),
    (4611686018427387709, 332795564299355040),
    (4611686018427387701, 1516271632427511319),
    (4611686018427387617, 1741778642412996051),
    (4611686018427387461, 28265398815898435),
    (4611686018427387421, 514749418491258170),
    (4611686018427387409, 991982837001326714),
    (4611686018427387329, 2031432188910929020),
    (4611686018427387301, 1241939876926444310),
    (4611686018427387241, 808263873925576861),
    (4611686018427387113, 690495592644948772),
    (4611686018427387073, 180802848473195561),
    (4611686018427386981, 2084562456366214808),
    (4611686018427386897, 111460882215017084),
    (4611686018427386389, 1104889923000138749),
    (4611686018427386329, 1281130723377209022),
    (4611686018427386309, 1811147786651960905),
    (4611686018427386201, 591221990606863500),
    (4611686018427386081, 879469301523366183),
    (4611686018427385993, 2042732430872809800),
    (4611686018427385981, 1540742349975604709),
    (4611686018427385861, 340746891746036152),
    (4611686018427385801, 763764468111343237),
    (4611686018427385717, 121014529582591404),
    (4611686018427385657, 650646943689027502),
    (4611686018427385553, 1507759114813668477),
    (4611686018427385537, 809161973724723280),
    (4611686018427385529, 1575113630864075313),
    (4611686018427385393, 1661130239550759607),
    (4611686018427385321, 907772622143479315),
    (4611686018427385229, 2015329645351990653),
    (4611686018427385013, 710159251660361668),
    (4611686018427384977, 1556345062613259113),
    (4611686018427384881, 466170191942098076),
    (4611686018427384653, 1778715919255686619),
    (4611686018427384649, 1587072284640705076),
    (4611686018427384641, 377172071558293784),
    (4611686018427384353, 1548634632592217027),
    (4611686018427384341, 1114814540227190503),
    (4611686018427384233, 2289599604705011076),
    (4611686018427384137, 1952624500984796254),
    (4611686018427384101, 1372307075412731536),
    (4611686018427383741, 580217954855971042),
    (4611686018427383657, 1029852741305927616),
    (4611686018427383629, 1994800520197232949),
    (4611686018427383501, 1714200686401509853),
    (4611686018427383309, 1302189147759568430),
    (4611686018427383197, 1579298115107202295),
    (4611686018427383089, 1065922036748737744),
    (4611686018427382933, 343697531709198209),
    (4611686018427382913, 741213976568883869),
    (4611686018427382901, 41340314771985871),
    (4611686018427382849, 1886207209513476292),
    (4611686018427382801, 717808201637016422),
    (4611686018427382549, 912604872355882515),
    (4611686018427382429, 110099455842825528),
    (4611686018427382421, 1622026088518867424),
    (4611686018427382357, 943007960997246490),
    (4611686018427382333, 83476361846634932),
    (4611686018427382133, 831877169087948199),
    (4611686018427382021, 773755569914422333),
    (4611686018427381989, 1830490045286439468),
    (4611686018427381977, 1345247273401718338),
    (4611686018427381961, 671326610579678390),
    (4611686018427381913, 1321430819158815318),
    (4611686018427381877, 824765449690497417),
    (4611686018427381869, 766579696640879793),
    (4611686018427381841, 327504850427290395),
    (4611686018427381781, 1345938568120916233),
    (4611686018427381769, 1482512287593838635),
    (4611686018427381757, 1599231891883222536),
    (4611686018427381581, 1073504096767913941),
    (4611686018427381577, 25065454193465198),
    (4611686018427381493, 503490916108192476),
    (4611686018427381277, 2073508841357096327),
    (4611686018427381077, 387557294160923743),
    (4611686018427380897, 832130576414713970),
    (4611686018427380861, 1028131447405240982),
    (4611686018427380833, 11645261292158721),
    (4611686018427380621, 1803187002361468632),
    (4611686018427380569, 1608353127735328037),
    (4611686018427380533, 1405471440911207716),
    (4611686018427380509, 745021806442835410),
    (4611686018427380489, 1965861338430787310),
    (4611686018427380369, 341561123217169823),
    (4611686018427380357, 1263472247273461416),
    (4611686018427380197, 775216811559335727),
    (4611686018427380089, 1562138480538120618),
    (4611686018427379993, 2267768024649599510),
    (4611686018427379889, 1759268198646543087),
    (4611686018427379789, 418517270669759526),
    (4611686018427379769, 886637254491365954),
    (4611686018427379753, 1290742977221437511),
];

/// The `k`-th split prime with its root of -1; extends past the table on demand.
pub(crate) fn split_prime(k: usize) -> (u64, u64) {
    if let Some(&pr) = SPLIT_PRIMES.get(k) {
        return pr;
    }
    let mut skip = k - SPLIT_PRIMES.len();
    let mut n = SPLIT_PRIMES[SPLIT_PRIMES.len() - 1].0 - 4;
    loop {
        if is_prime_u64(n) {
            if skip == 0 {
                return (n, sqrt_neg_one(n));
            }
            skip -= 1;
        }
        n -= 4;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime_u64(65537));
        assert!(!is_prime_u64(65537 * 3));
        assert!(is_prime_u64(4611686018427387817));
        assert_eq!(factor_u64(360), alloc::vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(1), alloc::vec![]);
        assert_eq!(factor_u64(97 * 97), alloc::vec![(97, 2)]);
    }

    #[test]
    fn split_prime_table_is_consistent() {
        for k in 0..SPLIT_PRIMES.len() + 2 {
            let (p, r) = split_prime(k);
            assert_eq!(p % 4, 1);
            assert!(is_prime_u64(p));
            assert_eq!(mul_mod(r, r, p), p - 1);
        }
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(divisors_u64(12), alloc::vec![1, 2, 3, 4, 6, 12]);
    }
}
