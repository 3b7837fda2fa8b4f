use std::collections::BTreeMap;

use abelreps::counts::{
    card_i_d, card_i_prime_power, degree_table_with_divisors, relevant_divisors,
};
use abelreps::numtheory::{divisors, factor, lcm, mul_order};
use abelreps::oracle::{character_order, enumerate_characters, frobenius_orbits, OracleOptions};
use abelreps::{primary_decomposition, CyclicFactorList, FieldSpec, PrimaryDecomposition};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

const PRIMES: [u128; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn naive_order(q: u64, d: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    let (q, mut x, mut n) = (q % d, q % d, 1);
    while x != 1 {
        x = x * q % d;
        n += 1;
    }
    n
}

fn group(xs: &[u64]) -> PrimaryDecomposition {
    primary_decomposition(&xs.iter().copied().collect()).unwrap()
}

/// Cyclic factor lists with product at most `limit`.
fn factor_lists(max_factor: u64, limit: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1..=max_factor, 0..5).prop_map(move |xs| {
        let mut product = 1;
        xs.into_iter()
            .take_while(|&m| {
                product *= m;
                product <= limit
            })
            .collect()
    })
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    (prop::sample::select(PRIMES.to_vec()), 1u32..=4)
        .prop_map(|(p, m)| FieldSpec::new(p, m).unwrap())
}

fn coprime(g: &PrimaryDecomposition, q: &FieldSpec) -> bool {
    g.order().valuation(q.characteristic()) == 0
}

proptest! {
    #[test]
    fn order_is_least_exponent(q in 2u64..2000, d in 1u64..2000) {
        prop_assume!(q.gcd(&d) == 1);
        let n = mul_order(&big(q), &big(d)).unwrap().to_u64().unwrap();
        let mut x = 1 % d;
        for j in 1..=n {
            x = x * q % d;
            prop_assert_eq!(x == 1 % d, j == n, "j = {}", j);
        }
    }

    #[test]
    fn order_divides_brute_totient(q in 2u64..500, d in 1u64..500) {
        prop_assume!(q.gcd(&d) == 1);
        let phi = (1..=d).filter(|k| k.gcd(&d) == 1).count() as u64;
        let n = mul_order(&big(q), &big(d)).unwrap().to_u64().unwrap();
        prop_assert_eq!(phi % n, 0);
        prop_assert_eq!(n, naive_order(q, d));
    }

    #[test]
    fn order_is_lcm_over_coprime_prime_powers(
        q in 2u64..=10_000,
        i in 0usize..15,
        j in 0usize..15,
        a in 1u32..5,
        b in 1u32..5,
    ) {
        prop_assume!(i != j);
        let d1 = PRIMES[i].pow(a) as u64;
        let d2 = PRIMES[j].pow(b) as u64;
        prop_assume!(d1 <= 10_000 && d2 <= 10_000 && q.gcd(&(d1 * d2)) == 1);
        let whole = mul_order(&big(q), &big(d1 * d2)).unwrap();
        let parts = lcm(
            &mul_order(&big(q), &big(d1)).unwrap(),
            &mul_order(&big(q), &big(d2)).unwrap(),
        ).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn divisors_are_sorted_and_complete(n in 1u64..100_000) {
        let f = factor(&big(n)).unwrap();
        let ds = divisors(&f);
        prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(ds.iter().all(|d| (big(n) % d) == BigUint::from(0u32)));
        prop_assert_eq!(BigUint::from(ds.len()), f.divisor_count());
        let brute = (1..=n).filter(|d| n % d == 0).count();
        prop_assert_eq!(ds.len(), brute);
    }

    #[test]
    fn factorization_multiplies_back(n in 1u128..(1u128 << 80)) {
        let f = factor(&BigUint::from(n)).unwrap();
        let product = f.factors().iter().fold(BigUint::one(), |acc, &(p, e)| {
            assert!(abelreps::numtheory::is_prime(p));
            acc * BigUint::from(p).pow(e)
        });
        prop_assert_eq!(product, BigUint::from(n));
        prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn decomposition_ignores_order_and_ones(
        xs in factor_lists(500, 1 << 40),
        seed in any::<u64>(),
        ones in 0usize..3,
    ) {
        let g = group(&xs);
        let mut shuffled = xs.clone();
        let len = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        shuffled.extend(std::iter::repeat_n(1, ones));
        prop_assert_eq!(&group(&shuffled), &g);

        let product: BigUint = xs.iter().map(|&m| big(m)).product();
        prop_assert_eq!(g.order().value(), &product);
        prop_assert!(g.exponent().divides(g.order()));
        prop_assert_eq!(g.exponent() == g.order(), g.is_cyclic());
        let lcm_all = xs.iter().fold(1u64, |acc, &m| acc.lcm(&m));
        prop_assert_eq!(g.exponent().value(), &big(lcm_all));
        for exps in g.components().values() {
            prop_assert!(exps.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn classes_partition_the_dual(xs in factor_lists(1000, 1 << 30)) {
        let g = group(&xs);
        let total: BigUint = relevant_divisors(g.exponent())
            .iter()
            .map(|d| card_i_d(&g, d).unwrap())
            .sum();
        prop_assert_eq!(&total, g.order().value());
    }

    #[test]
    fn sylow_classes_telescope(r in prop::sample::select(PRIMES.to_vec()), exps in prop::collection::vec(1u32..6, 1..4)) {
        let mut exps = exps;
        exps.sort_unstable();
        let top = *exps.last().unwrap();
        let from_one: BigUint = (1..=top).map(|l| card_i_prime_power(r, &exps, l).unwrap()).sum();
        let sylow = BigUint::from(r).pow(exps.iter().sum::<u32>());
        if r == 2 {
            prop_assert_eq!(from_one, sylow);
        } else {
            prop_assert_eq!(from_one + 1u32, sylow);
        }
    }

    #[test]
    fn table_invariants(xs in factor_lists(300, 100_000), q in fields()) {
        let g = group(&xs);
        prop_assume!(coprime(&g, &q));
        let (table, contributions) = degree_table_with_divisors(&g, &q).unwrap();
        prop_assert_eq!(&table.dimension(), g.order().value());
        for c in &contributions {
            prop_assert_eq!(&(&c.degree * &c.count), &c.card_id);
        }
        let top = mul_order(q.order(), g.exponent().value()).unwrap();
        for n in table.degrees() {
            prop_assert!((&top % &n) == BigUint::from(0u32));
        }
        prop_assert_eq!(table.max_degree(), Some(&top));
    }

    #[test]
    fn degree_set_depends_only_on_exponent(xs in factor_lists(200, 50_000), extra in 1u64..50, q in fields()) {
        let g = group(&xs);
        let e = g.exponent().value().to_u64().unwrap();
        // Adding a factor dividing e keeps the exponent.
        let d = e.gcd(&extra);
        let mut ys = xs.clone();
        ys.push(d);
        ys.push(e);
        let h = group(&ys);
        prop_assert_eq!(h.exponent(), g.exponent());
        prop_assume!(coprime(&g, &q));
        let a = abelreps::degree_table(&g, &q).unwrap();
        let b = abelreps::degree_table(&h, &q).unwrap();
        prop_assert_eq!(a.degrees(), b.degrees());
    }

    #[test]
    fn oracle_agrees_with_closed_form(xs in factor_lists(120, 5_000), q in fields()) {
        let g = group(&xs);
        prop_assume!(coprime(&g, &q));
        let closed = abelreps::degree_table(&g, &q).unwrap();
        let brute = frobenius_orbits(&g, &q, &OracleOptions::default()).unwrap();
        prop_assert_eq!(closed, brute);
    }

    #[test]
    fn oracle_counts_reproduce_class_sizes(xs in factor_lists(100, 4_000)) {
        let g = group(&xs);
        let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
        for chi in enumerate_characters(&g, 10_000).unwrap() {
            *by_order.entry(character_order(&chi)).or_default() += 1;
        }
        let even = g.exponent().is_even();
        for d in relevant_divisors(g.exponent()) {
            let d = d.to_u64().unwrap();
            let mut brute = by_order.get(&d).copied().unwrap_or(0);
            if even && d % 4 == 2 {
                brute += by_order.get(&(d / 2)).copied().unwrap_or(0);
            }
            prop_assert_eq!(card_i_d(&g, &big(d)).unwrap(), big(brute), "d = {}", d);
        }
    }

    #[test]
    fn orbit_lengths_sum_to_order(xs in factor_lists(100, 4_000), q in fields()) {
        let g = group(&xs);
        prop_assume!(coprime(&g, &q));
        // Unchecked walk: only the partition property is asserted here.
        let opts = OracleOptions { check_orbits: false, ..Default::default() };
        let t = frobenius_orbits(&g, &q, &opts).unwrap();
        prop_assert_eq!(&t.dimension(), g.order().value());
    }
}

#[test]
fn enumeration_is_lexicographic_and_complete() {
    let g = group(&[4, 6, 5]);
    let all: Vec<Vec<u64>> = enumerate_characters(&g, 1000)
        .unwrap()
        .map(|c| c.residues().to_vec())
        .collect();
    assert_eq!(all.len(), 120);
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn cyclic_factor_list_display_parses_back() {
    let l: CyclicFactorList = [12u64, 1, 7].into_iter().collect();
    assert_eq!(l.to_string().parse::<CyclicFactorList>().unwrap(), l);
}
