//! The `verify` subcommand: named cross-oracle suites, each printing one
//! PASS/FAIL line with a counterexample on failure. Suites run in
//! alphabetical order so reports are stable; randomized suites draw from a
//! seeded generator.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

use pauli_pascal::divergent::{
    euler_transform_sum, fib3_negative_diagonal, jacobsthal_negative_diagonal,
    pauli_jacobsthal_negative_diagonal, DiagonalSeries, Summation,
};
use pauli_pascal::matrix::{matrix_eval, scalar_eval, Matrix2};
use pauli_pascal::multi_index::CommutationMode::{AntiCommutative, Commutative};
use pauli_pascal::pyramid::verify_pauli_binomial_rule;
use pauli_pascal::sequences::{
    binet_k, fib_from_diagonals, fib_k, friendly_squares, negative_index_identity_check, pauli_fib,
    pauli_jacobsthal,
};
use pauli_pascal::{rat, ratio, GradedElement, Int, Rational};

pub const SUITES: [&str; 6] = [
    "binet-vs-recurrence",
    "diagonal-vs-recurrence",
    "divergent-vs-binet",
    "friendly-squares",
    "matrix-oracle",
    "pauli-binomial-rule",
];

type SuiteResult = Result<String, String>;

pub fn run_suite(name: &str, seed: u64) -> Option<SuiteResult> {
    match name {
        "binet-vs-recurrence" => Some(binet_vs_recurrence()),
        "diagonal-vs-recurrence" => Some(diagonal_vs_recurrence()),
        "divergent-vs-binet" => Some(divergent_vs_binet()),
        "friendly-squares" => Some(friendly_squares_suite()),
        "matrix-oracle" => Some(matrix_oracle(seed)),
        "pauli-binomial-rule" => Some(pauli_binomial_rule()),
        _ => None,
    }
}

fn binet_vs_recurrence() -> SuiteResult {
    let mut checked = 0usize;
    for k in 1..=10u32 {
        for n in -60..=60i64 {
            let binet = binet_k(n, k).map_err(|e| format!("binet_k({n},{k}): {e}"))?;
            let rec = fib_k(n, k).map_err(|e| format!("fib_k({n},{k}): {e}"))?;
            if binet != rec {
                return Err(format!(
                    "binet_k({n},{k}) = {binet} but recurrence gives {rec}"
                ));
            }
            checked += 1;
        }
        for n in 1..=40u32 {
            if !negative_index_identity_check(n, k)
                .map_err(|e| format!("identity({n},{k}): {e}"))?
            {
                return Err(format!("negative-index identity fails at n={n}, k={k}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} assertions, k <= 10, |n| <= 60"))
}

fn diagonal_vs_recurrence() -> SuiteResult {
    let mut checked = 0usize;
    for k in 1..=4u32 {
        for n in 1..=25u32 {
            let diag = fib_from_diagonals(n, k, Commutative)
                .map_err(|e| format!("diagonal({n},{k}): {e}"))?;
            let rec = fib_k(n as i64, k).expect("valid order");
            if Rational::from_integer(diag.clone()) != rec {
                return Err(format!(
                    "commutative diagonal n={n} k={k}: {diag} vs recurrence {rec}"
                ));
            }
            checked += 1;
        }
    }
    for n in 1..=20u32 {
        let diag = fib_from_diagonals(n, 1, AntiCommutative).expect("order 1");
        if Rational::from_integer(diag.clone()) != pauli_fib(n as i64) {
            return Err(format!("Pauli diagonal order 1, n={n}: {diag}"));
        }
        checked += 1;
    }
    for n in 1..=16u32 {
        let diag = fib_from_diagonals(n, 2, AntiCommutative).expect("order 2");
        if Rational::from_integer(diag.clone()) != pauli_jacobsthal(n as i64) {
            return Err(format!("Pauli diagonal order 2, n={n}: {diag}"));
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} assertions: orders 1..4 commutative, Pauli orders 1..2"
    ))
}

fn divergent_vs_binet() -> SuiteResult {
    // the printed value assignments
    let printed: [(u32, Rational); 3] = [(1, ratio(1, 2)), (2, ratio(-1, 4)), (3, ratio(3, 8))];
    for (n, expected) in printed {
        let got = jacobsthal_negative_diagonal(n).map_err(|e| format!("J(-{n}): {e}"))?;
        if got != expected {
            return Err(format!("J(-{n}) diagonal = {got}, expected {expected}"));
        }
    }
    for (n, expected) in [(1u32, rat(1)), (3, rat(0))] {
        let got = pauli_jacobsthal_negative_diagonal(n).map_err(|e| format!("PJ(-{n}): {e}"))?;
        if got != expected {
            return Err(format!("PJ(-{n}) diagonal = {got}, expected {expected}"));
        }
    }
    let got = fib3_negative_diagonal(1).map_err(|e| format!("F3(-1): {e}"))?;
    if got != ratio(1, 3) {
        return Err(format!("F3(-1) diagonal = {got}, expected 1/3"));
    }
    // closure of the loop against the Binet values
    let mut checked = 5usize;
    for n in 1..=8u32 {
        let j = jacobsthal_negative_diagonal(n).expect("valid");
        if j != binet_k(-(n as i64), 2).expect("valid") {
            return Err(format!("J(-{n}) diagonal disagrees with Binet"));
        }
        let f = fib3_negative_diagonal(n).expect("valid");
        if f != binet_k(-(n as i64), 3).expect("valid") {
            return Err(format!("F3(-{n}) diagonal disagrees with Binet"));
        }
        checked += 2;
    }
    for n in [1u32, 3, 5, 7] {
        let pj = pauli_jacobsthal_negative_diagonal(n).expect("odd");
        if pj != pauli_jacobsthal(-(n as i64)) {
            return Err(format!("PJ(-{n}) diagonal disagrees with the mapping"));
        }
        checked += 1;
    }
    // the transform method agrees on its domain
    let alternating =
        DiagonalSeries::new(
            "1 - 1 + 1 - ...",
            |i| {
                if i % 2 == 0 {
                    rat(1)
                } else {
                    rat(-1)
                }
            },
        );
    match euler_transform_sum(&alternating, 2) {
        Summation::Exact(v) if v == ratio(1, 2) => checked += 1,
        other => return Err(format!("Euler transform of 1-1+1-...: {other:?}")),
    }
    let staircase = DiagonalSeries::new("1 - 2 + 3 - ...", |i| {
        let v = rat(i as i64 + 1);
        if i % 2 == 0 {
            v
        } else {
            -v
        }
    });
    match euler_transform_sum(&staircase, 2) {
        Summation::Exact(v) if v == ratio(1, 4) => checked += 1,
        other => return Err(format!("Euler transform of 1-2+3-...: {other:?}")),
    }
    Ok(format!(
        "{checked} assertions: printed values, Binet closure n <= 8, Euler agreement"
    ))
}

fn friendly_squares_suite() -> SuiteResult {
    let table: [(u64, i64); 6] = [(1, 0), (3, 2), (5, 6), (7, 12), (9, 20), (11, 30)];
    for (m, expected) in table {
        let (k, (q1, q2)) = friendly_squares(m).map_err(|e| format!("m={m}: {e}"))?;
        if k != Int::from(expected) {
            return Err(format!("k({m}) = {k}, expected {expected}"));
        }
        if q1 != ratio(1 + m as i64, 2) || q2 != ratio(1 - m as i64, 2) {
            return Err(format!("roots for m={m} are {q1}, {q2}"));
        }
    }
    let mut checked = 6usize;
    let mut m = 1u64;
    while m <= 99 {
        let (k, _) = friendly_squares(m).expect("odd m");
        if Int::from(4) * &k + Int::from(1) != Int::from(m) * Int::from(m) {
            return Err(format!("1 + 4k is not {m}^2 at m={m}"));
        }
        checked += 1;
        m += 2;
    }
    Ok(format!("{checked} assertions, odd m <= 99"))
}

fn matrix_oracle(seed: u64) -> SuiteResult {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let random_rational = |rng: &mut ChaCha20Rng| {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=4);
        ratio(num, den)
    };
    let mut checked = 0usize;
    for dim in 1..=3usize {
        for _ in 0..5 {
            let values: Vec<Rational> = (0..dim).map(|_| random_rational(&mut rng)).collect();
            let cols: Vec<Rational> = (0..dim).map(|_| random_rational(&mut rng)).collect();
            // anticommutative: sigma representation
            let v = GradedElement::generator_sum(dim, AntiCommutative).expect("valid dim");
            let base = matrix_eval(&v, &values).expect("polynomial");
            for n in 0..=12u32 {
                let engine = matrix_eval(&v.power(n).expect("power"), &values).expect("poly");
                if engine != base.pow(n) {
                    return Err(format!("anticommutative dim={dim} n={n} values={values:?}"));
                }
                checked += 1;
            }
            // commutative: diagonal (two independent scalar evaluations)
            let v = GradedElement::generator_sum(dim, Commutative).expect("valid dim");
            let base = Matrix2::diagonal(
                scalar_eval(&v, &values).expect("poly"),
                scalar_eval(&v, &cols).expect("poly"),
            );
            for n in 0..=12u32 {
                let p = v.power(n).expect("power");
                let engine = Matrix2::diagonal(
                    scalar_eval(&p, &values).expect("poly"),
                    scalar_eval(&p, &cols).expect("poly"),
                );
                if engine != base.pow(n) {
                    return Err(format!("commutative dim={dim} n={n} values={values:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} assertions: dims 1..3, n <= 12, 5 substitutions each, both modes"
    ))
}

fn pauli_binomial_rule() -> SuiteResult {
    match verify_pauli_binomial_rule(40) {
        Ok(()) => Ok("closed rule matches the engine for all 0 <= j <= n <= 40".into()),
        Err((n, j)) => Err(format!("rule disagrees with the engine at n={n}, j={j}")),
    }
}

/// Runs the named suite (or all of them, alphabetically) and renders the
/// report. Returns (report, all_passed); None when the name is unknown.
pub fn run(names: &[String], seed: u64) -> Option<(String, bool)> {
    let selected: Vec<&str> = if names.is_empty() {
        SUITES.to_vec()
    } else {
        let mut picked = Vec::new();
        for name in names {
            if name == "all" {
                picked.extend_from_slice(&SUITES);
            } else if SUITES.contains(&name.as_str()) {
                picked.push(name.as_str());
            } else {
                return None;
            }
        }
        picked.sort_unstable();
        picked.dedup();
        picked
    };
    let mut report = String::new();
    let mut all_passed = true;
    for name in selected {
        match run_suite(name, seed).expect("selected names are valid") {
            Ok(detail) => report.push_str(&format!("PASS {name}: {detail}\n")),
            Err(counterexample) => {
                all_passed = false;
                report.push_str(&format!("FAIL {name}: {counterexample}\n"));
            }
        }
    }
    Some((report, all_passed))
}
