//! Cross-validation battery behind `padic check`.

use crate::commands::build_input;
use crate::input::{self, Input};
use crate::report::Report;
use crate::{Cli, CliError, Source};
use padic_automata::analysis::digit_compat_check;
use padic_automata::automaton::{build_diagonal_direct, Automaton, StateKey};
use padic_automata::numeration::{digit_step, make_q, output_of, rep, val, Section, ZTable};
use padic_automata::oracle::{diagonal_expand_with_budget, residual, series_solve, SeriesPrefix};
use padic_automata::poly::CurveSpec;
use padic_automata::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;

const MAX_WORD: usize = 32;

struct Tally {
    failures: usize,
}

impl Tally {
    fn record(&mut self, r: &mut Report, name: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        r.field(
            name,
            format!("{} ({detail})", if ok { "PASS" } else { "FAIL" }),
        );
    }
}

pub fn run(
    cli: &Cli,
    source: &Source,
    terms: Option<usize>,
    words: usize,
    seed: u64,
    stored: Option<&Path>,
) -> Result<Report, (Option<Report>, CliError)> {
    let input = input::source(source).map_err(|e| (None, e))?;
    let a = match stored {
        Some(path) => {
            let a = input::load(path).map_err(|e| (None, e))?;
            let ring = input::ring(&source.ring).map_err(|e| (None, e))?;
            if a.ring != ring {
                let msg = format!(
                    "automaton is over {}^{}, not {}^{}",
                    a.ring.p, a.ring.alpha, ring.p, ring.alpha
                );
                return Err((None, CliError::Usage(msg)));
            }
            a
        }
        None => build_input(cli, &input, false).map_err(|e| (None, e))?,
    };
    let mut r = Report::new("check");
    r.field("states", a.len());
    let mut tally = Tally { failures: 0 };
    let outcome = match &input {
        Input::Curve(c) => check_curve(
            cli,
            c,
            &a,
            terms.unwrap_or(2000),
            words,
            seed,
            &mut r,
            &mut tally,
        ),
        Input::Diagonal(spec, _) => {
            let default = if spec.nvars() == 2 { 2000 } else { 100 };
            check_diagonal(
                cli,
                &input,
                &a,
                terms.unwrap_or(default),
                &mut r,
                &mut tally,
            )
        }
    };
    if let Err(e) = outcome {
        return Err((Some(r), e));
    }
    r.field("result", if tally.failures == 0 { "PASS" } else { "FAIL" });
    if tally.failures > 0 {
        return Err((Some(r), CliError::CheckFailed(tally.failures)));
    }
    Ok(r)
}

fn agree(a: &Automaton, oracle: &SeriesPrefix) -> Option<usize> {
    (0..oracle.len()).find(|&n| a.eval(n as u128) != oracle.coeffs[n])
}

#[allow(clippy::too_many_arguments)]
fn check_curve(
    cli: &Cli,
    c: &CurveSpec,
    a: &Automaton,
    terms: usize,
    words: usize,
    seed: u64,
    r: &mut Report,
    tally: &mut Tally,
) -> Result<(), CliError> {
    let ring = c.ring;
    let q = make_q(c);
    let zt = ZTable::new(&q, &ring, Section::Algebraic);
    let budget = cli.global.monomial_budget;
    let Some(keys) = a
        .keys
        .as_ref()
        .filter(|k| k.iter().all(|k| matches!(k, StateKey::Digits(_))))
    else {
        r.field("digit_direct", "SKIP (no digit keys)");
        return check_sequence(c, a, terms, words, seed, r, tally);
    };
    let (mut checked, mut skipped, mut bad) = (0usize, 0usize, 0usize);
    let qpow = q.pow(ring.modulus - ring.modulus / ring.p, ring.modulus);
    for (state, key) in keys.iter().enumerate() {
        let StateKey::Digits(t) = key else {
            unreachable!("filtered above")
        };
        bad += usize::from(a.outputs[state] != output_of(t, &zt));
        let s = match val(t, &q, &ring, budget) {
            Ok(s) => s,
            Err(Error::BudgetExceeded { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let prod = s.mul(&qpow, ring.modulus);
        for sym in 0..ring.p {
            let stepped = digit_step(t, sym, &zt);
            let direct = rep(&prod.cartier(sym, 0, ring.p), &q, &ring, budget);
            let succ = &keys[a.step(state, sym)];
            let ok =
                matches!(&direct, Ok(d) if *d == stepped) && *succ == StateKey::Digits(stepped);
            bad += usize::from(!ok);
        }
        checked += 1;
    }
    tally.record(
        r,
        "digit_direct",
        bad == 0,
        format!("{checked} states, {skipped} over budget, {bad} mismatches"),
    );
    check_sequence(c, a, terms, words, seed, r, tally)
}

fn check_sequence(
    c: &CurveSpec,
    a: &Automaton,
    terms: usize,
    words: usize,
    seed: u64,
    r: &mut Report,
    tally: &mut Tally,
) -> Result<(), CliError> {
    let ring = c.ring;
    let oracle = series_solve(c, terms.saturating_sub(1));
    let oracle = SeriesPrefix {
        coeffs: oracle.coeffs[..terms.min(oracle.len())].to_vec(),
        ..oracle
    };
    let zero = residual(c, &oracle).iter().all(|&v| v == 0);
    tally.record(
        r,
        "oracle_residual",
        zero,
        format!("{} terms", oracle.len()),
    );
    let first = agree(a, &oracle);
    tally.record(
        r,
        "oracle_terms",
        first.is_none(),
        match first {
            None => format!("{} terms", oracle.len()),
            Some(n) => format!("first mismatch at n = {n}"),
        },
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failed = 0;
    let levels = ring.alpha.saturating_sub(1) as usize;
    for _ in 0..words {
        let len = rng.gen_range(0..=MAX_WORD);
        let word: Vec<u64> = (0..len).map(|_| rng.gen_range(0..ring.p)).collect();
        for beta in 1..ring.alpha {
            if !digit_compat_check(c, beta, &word)? {
                failed += 1;
            }
        }
    }
    tally.record(
        r,
        "precision_compat",
        failed == 0,
        format!("{words} words x {levels} levels, {failed} failures"),
    );
    Ok(())
}

fn check_diagonal(
    cli: &Cli,
    input: &Input,
    a: &Automaton,
    terms: usize,
    r: &mut Report,
    tally: &mut Tally,
) -> Result<(), CliError> {
    let Input::Diagonal(spec, ring) = input else {
        unreachable!()
    };
    if spec.nvars() == 2 {
        let direct = build_diagonal_direct(spec, ring, &input::options(&cli.global)?)?;
        let same = direct.next == a.next && direct.outputs == a.outputs;
        tally.record(
            r,
            "digit_direct",
            same,
            format!(
                "{} digit states, {} polynomial states",
                a.len(),
                direct.len()
            ),
        );
    }
    if terms > 0 {
        let oracle = diagonal_expand_with_budget(spec, terms - 1, ring, cli.global.lattice_budget)?;
        let first = agree(a, &oracle);
        tally.record(
            r,
            "oracle_terms",
            first.is_none(),
            match first {
                None => format!("{} terms", oracle.len()),
                Some(n) => format!("first mismatch at n = {n}"),
            },
        );
    }
    Ok(())
}
