//! The check suites surfaced by `b4complex verify`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::action::{
    link_permutation, phi, theta, verify_action_homomorphism_on, verify_kernel,
    verify_simplicial, verify_stabilizer_order, verify_transitivity, LetterPerm,
};
use crate::braid::{equals, handle_reduce_trivial, is_power_of_x, w, x_power, Letter, NormalForm, Word};
use crate::complex::{
    build_ball, homology_evidence, link, shortest_cycle, spellings_of_x, verify_link_condition,
    verify_spelling_edge_bijection, Ball, CosetKey,
};
use crate::complex::link::{cycle_letters, MIN_LINK_GIRTH};
use crate::error::{Error, Result};
use crate::maps::{
    builtin_presentations, iota, tau, tau_decomposition_holds, verify_homomorphism,
    verify_involution,
};
use crate::report::{Report, SuiteReport};
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Presentation,
    Link,
    Action,
    Curvature,
    Oracle,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["presentation", "link", "action", "curvature", "oracle", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Presentation => "presentation",
            Suite::Link => "link",
            Suite::Action => "action",
            Suite::Curvature => "curvature",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "presentation" => Suite::Presentation,
            "link" => Suite::Link,
            "action" => Suite::Action,
            "curvature" => Suite::Curvature,
            "oracle" => Suite::Oracle,
            "all" => Suite::All,
            other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub radius: usize,
    /// Homomorphism sample pairs; the oracle suite draws twice as many words.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { radius: 2, samples: 500, seed: 0 }
    }
}

/// Longest Artin word drawn by the oracle suite.
pub const ORACLE_MAX_LEN: usize = 24;

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let ball = build_ball(opts.radius)?;
    let report = match suite {
        Suite::Presentation => presentation_suite(),
        Suite::Link => link_suite(&ball),
        Suite::Action => action_suite(&ball, opts)?,
        Suite::Curvature => curvature_suite(&ball),
        Suite::Oracle => oracle_suite(2 * opts.samples, opts.seed),
        Suite::All => {
            let mut r = presentation_suite();
            r.extend(link_suite(&ball));
            r.extend(action_suite(&ball, opts)?);
            r.extend(curvature_suite(&ball));
            r.extend(oracle_suite(2 * opts.samples, opts.seed));
            r
        }
    };
    Ok(SuiteReport { suite: suite.name().to_string(), report, duration: start.elapsed() })
}

/// Both presentations hold in B₄, and τ is a homomorphic involution that
/// factors as ι followed by conjugation by `ac`.
pub fn presentation_suite() -> Report {
    let (p1, p2) = builtin_presentations();
    let mut r = Report::new();
    for p in [&p1, &p2] {
        for (id, lhs, rhs) in p.equalities() {
            r.check(format!("{}.{id}", p.name), format!("{lhs} = {rhs}"), equals(lhs, rhs), "");
        }
    }
    for p in [&p1, &p2] {
        let hom = verify_homomorphism(&tau(), p);
        let failed: Vec<String> = hom.failures().map(|c| c.id.clone()).collect();
        r.check(
            format!("tau.hom.{}", p.name),
            format!("tau respects every relation of {}", p.name),
            failed.is_empty(),
            format!("{} relations, {} failed", hom.len(), failed.len()),
        );
    }
    r.check("tau.involution", "tau(tau(l)) = l for every generator", verify_involution(&tau()), "");
    r.check("iota.involution", "iota(iota(l)) = l for every generator", verify_involution(&iota()), "");
    for g in crate::braid::Generator::ALL {
        r.check(
            format!("tau.decomp.{}", g.to_char()),
            format!("tau({0}) = (ac)^-1 iota({0}) (ac)", g.to_char()),
            tau_decomposition_holds(g),
            "",
        );
    }
    for k in 1..=4 {
        let img = tau().apply(&x_power(k));
        r.check(
            format!("tau.x{k}"),
            format!("tau(x^{k}) = x^-{k}"),
            is_power_of_x(&img) == Some(-k),
            "",
        );
    }
    r
}

/// Shape of the base link, the sixteen spellings of `x`, and regularity of
/// every link in the ball.
pub fn link_suite(ball: &Ball) -> Report {
    let mut r = Report::new();
    let lk = link(&CosetKey::base());
    r.check("link.nodes", "base link has 12 nodes", lk.nodes.len() == 12, lk.nodes.len().to_string());
    r.check("link.arcs", "base link has 16 arcs", lk.arcs.len() == 16, lk.arcs.len().to_string());
    r.check("link.degree_sum", "degree sum is 32", lk.degree_sum() == 32, lk.degree_sum().to_string());
    let cycle = shortest_cycle(&lk.graph());
    let girth = cycle.as_ref().map(Vec::len);
    r.check(
        "link.girth",
        "girth >= 6",
        girth.is_none_or(|g| g >= MIN_LINK_GIRTH),
        match &cycle {
            Some(c) => format!("girth {} via {}", c.len(), cycle_letters(&lk, c)),
            None => "acyclic".to_string(),
        },
    );
    r.check("link.girth_exact", "a simple 6-cycle exists in the base link", girth == Some(6), "");

    let spellings = spellings_of_x();
    r.check(
        "spellings.count",
        "16 spellings of x among 216 positive length-3 words",
        spellings.len() == 16,
        spellings.iter().map(Word::to_string).collect::<Vec<_>>().join(","),
    );
    r.check("spellings.bac", "bac is a spelling of x", spellings.contains(&w("bac")), "");
    r.extend(verify_spelling_edge_bijection());

    let base_arcs = lk.letter_arcs();
    let links: Vec<_> = ball.vertices.par_iter().map(|v| link(&v.key)).collect();
    let irregular: Vec<usize> = links
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            l.nodes.len() != 12
                || l.arcs.len() != 16
                || crate::complex::link_girth(l).is_some_and(|g| g < MIN_LINK_GIRTH)
        })
        .map(|(i, _)| i)
        .collect();
    r.check(
        "links.regular",
        format!("every link in the radius-{} ball has 12 nodes, 16 arcs, girth >= 6", ball.radius),
        irregular.is_empty(),
        format!("{} vertices, {} irregular", links.len(), irregular.len()),
    );
    let relabelled = links.iter().filter(|l| l.letter_arcs() != base_arcs).count();
    r.check(
        "links.isomorphic",
        "every link matches the base link letter by letter",
        relabelled == 0,
        format!("{relabelled} differ"),
    );
    let degrees_ok = (0..ball.vertices.len()).filter(|&i| ball.vertices[i].depth < ball.radius).all(|i| {
        ball.adjacent_indices(i).len() == 12
    });
    r.check(
        "ball.degree",
        "interior ball vertices have 12 neighbors in the ball",
        degrees_ok,
        "",
    );
    r
}

/// Kernel, transitivity, stabilizer, homomorphism, simpliciality, and the
/// θ conjugation law.
pub fn action_suite(ball: &Ball, opts: &VerifyOptions) -> Result<Report> {
    let base = CosetKey::base();
    let mut r = Report::new();

    let x_perm = link_permutation(&phi(&x_power(1)), &base)?;
    let expected = LetterPerm::from_cycles("(a e c f)(A E C F)(b d)(B D)").expect("valid cycles");
    r.check("action.x_on_link", "phi(x) acts on the base link as (a e c f)(A E C F)(b d)(B D)", x_perm == expected, x_perm.to_string());
    r.check(
        "action.x_order",
        "phi(x) has order 4 on the link, no fixed letters",
        x_perm.order() == 4 && x_perm.fixed_points() == 0,
        format!("order {}, {} fixed", x_perm.order(), x_perm.fixed_points()),
    );
    let x2 = x_perm.compose(&x_perm);
    let x3 = x2.compose(&x_perm);
    r.check(
        "action.x_powers",
        "phi(x)^2 and phi(x)^3 on the link are distinct and non-identity",
        x2 != x3 && !x2.is_identity() && !x3.is_identity(),
        format!("x^2 = {x2}, x^3 = {x3}"),
    );
    let t_perm = link_permutation(&theta(), &base)?;
    let mut x_powers = vec![LetterPerm::identity()];
    for k in 1..4 {
        x_powers.push(link_permutation(&phi(&x_power(k)), &base)?);
    }
    r.check(
        "action.theta_not_x",
        "theta differs from phi(x^k), k = 0..3, on the base link",
        x_powers.iter().all(|p| *p != t_perm),
        "",
    );
    let t_expected = LetterPerm::from_cycles("(aA)(cC)(bD)(dB)(eF)(fE)").expect("valid cycles");
    r.check("action.theta_on_link", "theta acts on the base link as (aA)(cC)(bD)(dB)(eF)(fE)", t_perm == t_expected, t_perm.to_string());
    r.check(
        "action.theta_order",
        "theta is an involution with no fixed letters",
        theta().order(4) == Some(2) && t_perm.order() == 2 && t_perm.fixed_points() == 0,
        "",
    );
    let conj_fail: Vec<String> = Letter::ALL
        .iter()
        .filter(|&&l| {
            let g = Word(vec![l]);
            theta().compose(&phi(&g).compose(&theta())) != phi(&tau().apply(&g))
        })
        .map(|l| l.to_string())
        .collect();
    r.check(
        "action.conjugation",
        "theta phi(l) theta = phi(tau(l)) for all 12 letters",
        conj_fail.is_empty(),
        conj_fail.join(","),
    );
    r.check("action.x_key_order", "phi(x) has order 4 as a key", phi(&x_power(1)).order(8) == Some(4), "");

    r.extend(verify_kernel(ball.radius.max(1))?);
    r.extend(verify_stabilizer_order()?);
    let orbit = verify_transitivity(ball);
    let misses: Vec<String> = orbit.failures().map(|c| c.id.clone()).collect();
    r.check(
        "action.transitive",
        format!("every vertex of the radius-{} ball is phi(rep) of the base", ball.radius),
        misses.is_empty(),
        format!("{} vertices, {} missed", orbit.len(), misses.len()),
    );
    r.extend(verify_action_homomorphism_on(ball, opts.samples, opts.seed));
    r.extend(verify_simplicial(&phi(&w("a")), ball));
    r.extend(verify_simplicial(&theta(), ball));
    Ok(r)
}

/// Link condition at every vertex and first homology of the ball.
pub fn curvature_suite(ball: &Ball) -> Report {
    let mut r = verify_link_condition(ball);
    let h = homology_evidence(ball);
    r.check("homology.b0", "the ball is connected", h.b0 == 1, format!("b0={}", h.b0));
    r.check("homology.b1_q", "b1 over Q is 0", h.b1_rational == 0, format!("b1={}", h.b1_rational));
    r.check("homology.b1_2", "b1 over F2 is 0", h.b1_mod2 == 0, format!("b1={}", h.b1_mod2));
    r
}

/// Garside normal form and handle reduction agree on triviality.
pub fn oracle_suite(words: usize, seed: u64) -> Report {
    let mut rng = sampling::rng(seed ^ 0x6f72_6163_6c65);
    let sample: Vec<_> = (0..words).map(|_| sampling::oracle_sample(&mut rng, ORACLE_MAX_LEN)).collect();
    let verdicts: Vec<(bool, bool)> = sample
        .par_iter()
        .map(|word| (NormalForm::from_artin(word).is_identity(), handle_reduce_trivial(word)))
        .collect();
    let disagreements: Vec<usize> =
        verdicts.iter().enumerate().filter(|(_, (a, b))| a != b).map(|(i, _)| i).collect();
    let trivial = verdicts.iter().filter(|(a, _)| *a).count();
    let distinct = sample.iter().collect::<HashSet<_>>().len();
    let mut r = Report::new();
    r.check(
        "oracle.agree",
        format!("normal form and handle reduction agree on {words} words of length <= {ORACLE_MAX_LEN}"),
        disagreements.is_empty(),
        match disagreements.first() {
            Some(&i) => format!("{} disagreements, first {}", disagreements.len(), sample[i]),
            None => format!("{trivial} trivial, {} non-trivial, {distinct} distinct", words - trivial),
        },
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn presentation_suite_has_thirteen_equalities() {
        let r = presentation_suite();
        assert!(r.passed());
        let eqs = r.checks.iter().filter(|c| c.id.starts_with("P1.") || c.id.starts_with("P2.")).count();
        assert_eq!(eqs, 13);
    }

    #[test]
    fn small_runs_pass() {
        let opts = VerifyOptions { radius: 1, samples: 10, seed: 1 };
        for suite in [Suite::Link, Suite::Action, Suite::Curvature, Suite::Oracle] {
            let rep = run_suite(suite, &opts).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn radius_zero_all_passes() {
        let opts = VerifyOptions { radius: 0, samples: 5, seed: 0 };
        assert!(run_suite(Suite::All, &opts).unwrap().passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = VerifyOptions { radius: 1, samples: 10, seed: 42 };
        let a = run_suite(Suite::All, &opts).unwrap().to_string();
        let b = run_suite(Suite::All, &opts).unwrap().to_string();
        assert_eq!(a, b);
    }
}
