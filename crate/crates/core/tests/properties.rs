//! Property tests against independent oracles: plain enumeration of ordered
//! subsets via itertools, exhaustive subsequence search, and exact rational
//! arithmetic.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use wsps::io::{emit_instance, parse_instance};
use wsps::{
    brute_force_opt, build_schedule, is_antithetical, key_sequence, normalize_instance,
    optimal_envelope_area, schedule_envelope, solve_antithetical, solve_keyseq,
    total_weighted_overlap, validate_schedule, verify_key_conditions, Error, Exact, Instance,
    Instance64, Job, Scalar, DEFAULT_ORACLE_LIMIT,
};

const TOL: f64 = 1e-9;

fn close(a: f64, b: f64) -> bool {
    wsps::scalar::rel_close(a, b, TOL)
}

/// Small integer values so that ties in both `p` and `w` are common.
fn jobs_strategy(max_n: usize) -> impl Strategy<Value = Vec<(u8, u8)>> {
    prop::collection::vec((1u8..=8, 0u8..=6), 0..=max_n)
}

fn instance_of(raw: &[(u8, u8)]) -> Instance64 {
    normalize_instance(
        raw.iter()
            .enumerate()
            .map(|(i, &(p, w))| Job::new(format!("j{i}"), p as f64, w as f64))
            .collect(),
    )
    .unwrap()
}

fn exact_instance_of(raw: &[(u8, u8)]) -> Instance<Exact> {
    let r = |v: u8| BigRational::from_integer(BigInt::from(v));
    normalize_instance(
        raw.iter()
            .enumerate()
            .map(|(i, &(p, w))| Job::new(format!("j{i}"), r(p), r(w)))
            .collect(),
    )
    .unwrap()
}

/// Antithetical by construction: sorted lengths, non-increasing weights,
/// equal lengths share a weight.
fn antithetical_strategy(max_n: usize) -> impl Strategy<Value = Vec<(u8, u8)>> {
    (
        prop::collection::vec(1u8..=12, 1..=max_n),
        prop::collection::vec(0u8..=9, 1..=max_n),
    )
        .prop_map(|(mut ps, mut ws)| {
            let n = ps.len().min(ws.len());
            ps.truncate(n);
            ws.truncate(n);
            ps.sort();
            ws.sort_by(|a, b| b.cmp(a));
            for i in 1..n {
                if ps[i] == ps[i - 1] {
                    ws[i] = ws[i - 1];
                }
            }
            ps.into_iter().zip(ws).collect()
        })
}

/// Every ordered subset through `build_schedule`, no pruning.
fn unpruned_optimum<T: Scalar>(instance: &Instance<T>) -> (T, usize) {
    let mut best = T::zero();
    let mut feasible = 1;
    for k in 1..=instance.len() {
        for order in (0..instance.len()).permutations(k) {
            if let Ok(s) = build_schedule(instance, &order) {
                feasible += 1;
                if s.objective > best {
                    best = s.objective;
                }
            }
        }
    }
    (best, feasible)
}

/// All subsequences of positions that pass the key conditions.
fn all_key_sequences<T: Scalar>(instance: &Instance<T>) -> Vec<Vec<usize>> {
    let n = instance.len();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|seq| verify_key_conditions(instance, seq))
        .collect()
}

fn feasible_orders(instance: &Instance64, rng_orders: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rng_orders
        .iter()
        .filter(|o| build_schedule(instance, o).is_ok())
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recurrence_and_positivity(raw in jobs_strategy(7), perm_seed in any::<u64>()) {
        let instance = instance_of(&raw);
        let mut order: Vec<usize> = (0..instance.len()).collect();
        // deterministic shuffle from the seed
        let mut s = perm_seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        // longest feasible prefix of the shuffled order
        let mut prefix = Vec::new();
        for &pos in &order {
            prefix.push(pos);
            if build_schedule(&instance, &prefix).is_err() {
                prefix.pop();
                break;
            }
        }
        let s = build_schedule(&instance, &prefix).unwrap();
        let mut prev = 0.0;
        for e in &s.entries {
            let job = instance.job(e.job);
            prop_assert_eq!(e.start, prev);
            prop_assert_eq!(e.completion, (e.start + job.p) / 2.0);
            let t = e.overlap();
            prop_assert!(t > 0.0 && t <= job.p / 2.0);
            prop_assert!(e.completion < job.p);
            prev = e.completion;
        }
        prop_assert!(close(s.objective, total_weighted_overlap(&instance, &s)));
        prop_assert!(validate_schedule(&instance, &s).is_empty());
        if !s.is_empty() {
            let area = schedule_envelope(&instance, &s).unwrap().area();
            prop_assert!(close(area, s.objective));
        }
        // pure function of its inputs
        prop_assert_eq!(build_schedule(&instance, &prefix).unwrap(), s);
    }

    #[test]
    fn scaling_is_exact_with_rationals(raw in jobs_strategy(6), num in 1i64..20, den in 1i64..20) {
        let instance = exact_instance_of(&raw);
        let lambda = BigRational::new(BigInt::from(num), BigInt::from(den));
        let order: Vec<usize> = (0..instance.len()).collect();
        let Ok(base) = build_schedule(&instance, &order) else { return Ok(()) };

        let heavier = instance.map_weights(|w| w * &lambda).unwrap();
        let s = build_schedule(&heavier, &order).unwrap();
        prop_assert_eq!(&s.objective, &(&base.objective * &lambda));

        let longer = instance.map_processing_times(|p| p * &lambda).unwrap();
        let s = build_schedule(&longer, &order).unwrap();
        prop_assert_eq!(&s.objective, &(&base.objective * &lambda));
        for (a, b) in s.entries.iter().zip(&base.entries) {
            prop_assert_eq!(&a.start, &(&b.start * &lambda));
            prop_assert_eq!(&a.completion, &(&b.completion * &lambda));
        }
    }

    #[test]
    fn scaling_with_floats(raw in jobs_strategy(6), lambda in 0.1f64..10.0) {
        let instance = instance_of(&raw);
        let order: Vec<usize> = (0..instance.len()).collect();
        let Ok(base) = build_schedule(&instance, &order) else { return Ok(()) };
        let heavier = instance.map_weights(|w| w * lambda).unwrap();
        prop_assert!(close(build_schedule(&heavier, &order).unwrap().objective, base.objective * lambda));
        let longer = instance.map_processing_times(|p| p * lambda).unwrap();
        prop_assert!(close(build_schedule(&longer, &order).unwrap().objective, base.objective * lambda));
    }

    #[test]
    fn oracle_pruning_matches_plain_enumeration(raw in jobs_strategy(5)) {
        let instance = exact_instance_of(&raw);
        let (best, feasible) = unpruned_optimum(&instance);
        let r = brute_force_opt(&instance, DEFAULT_ORACLE_LIMIT).unwrap();
        prop_assert_eq!(&r.optimum, &best);
        prop_assert_eq!(r.explored, feasible as u64);
        prop_assert_eq!(&r.best_schedule.objective, &r.optimum);
    }

    #[test]
    fn antithetical_spt_is_optimal(raw in antithetical_strategy(7)) {
        let instance = exact_instance_of(&raw);
        prop_assert!(is_antithetical(&instance));
        let spt = solve_antithetical(&instance).unwrap();
        prop_assert_eq!(spt.len(), instance.len());
        let opt = brute_force_opt(&instance, DEFAULT_ORACLE_LIMIT).unwrap();
        prop_assert_eq!(&spt.objective, &opt.optimum);

        let n = instance.len();
        for k in 1..=n {
            for order in (0..n).permutations(k) {
                if let Ok(s) = build_schedule(&instance, &order) {
                    // full permutations and proper subsets alike
                    prop_assert!(s.objective <= spt.objective);
                }
            }
        }
    }

    #[test]
    fn spt_on_non_antithetical_is_rejected(raw in jobs_strategy(6)) {
        let instance = instance_of(&raw);
        let verdict = solve_antithetical(&instance);
        if is_antithetical(&instance) {
            prop_assert!(verdict.is_ok());
        } else {
            prop_assert_eq!(verdict, Err(Error::NotAntithetical));
        }
    }

    #[test]
    fn key_sequence_is_the_unique_one(raw in jobs_strategy(10)) {
        let instance = instance_of(&raw);
        if instance.is_empty() {
            return Ok(());
        }
        let key = key_sequence(&instance).unwrap();
        prop_assert_eq!(all_key_sequences(&instance), vec![key.positions.clone()]);

        let jobs = instance.jobs();
        for (k, &i) in key.positions.iter().enumerate() {
            let suffix_max = jobs[i..].iter().map(|j| j.w).fold(f64::MIN, f64::max);
            prop_assert_eq!(jobs[i].w, suffix_max);
            if k > 0 {
                prop_assert!(jobs[key.positions[k - 1]].p < jobs[i].p);
            }
        }
        prop_assert!(key.upper_envelope.is_non_increasing());
    }

    #[test]
    fn key_schedule_bounds(raw in jobs_strategy(7)) {
        let instance = exact_instance_of(&raw);
        if instance.is_empty() {
            return Ok(());
        }
        let sol = solve_keyseq(&instance).unwrap();
        let ustar = sol.certificate().clone();
        let two = BigRational::from_integer(BigInt::from(2));
        prop_assert!(&sol.schedule.objective * &two >= ustar);

        // per job: overlap >= (p(ik) - p(ik-1)) / 2
        let mut prev_p = BigRational::from_integer(BigInt::from(0));
        for e in &sol.schedule.entries {
            let p = instance.job(e.job).p.clone();
            prop_assert!(e.overlap() * &two >= &p - &prev_p);
            prev_p = p;
        }

        let opt = brute_force_opt(&instance, DEFAULT_ORACLE_LIMIT).unwrap();
        prop_assert!(opt.optimum <= ustar);
        prop_assert!(sol.schedule.objective <= opt.optimum);
        if !opt.best_schedule.is_empty() {
            let estar = optimal_envelope_area(&instance, &opt).unwrap();
            prop_assert_eq!(&estar, &opt.optimum);
            prop_assert!(&sol.schedule.objective * &two >= estar);
            // pointwise domination of the optimal envelope by the upper one
            let e = schedule_envelope(&instance, &opt.best_schedule).unwrap();
            for q in e.breakpoints() {
                prop_assert!(e.value_at(q) <= sol.key_sequence.upper_envelope.value_at(q));
            }
        }
        prop_assert!(validate_schedule(&instance, &sol.schedule).is_empty());
    }

    #[test]
    fn strictly_decreasing_weights_coincide_with_spt(mut ps in prop::collection::btree_set(1u8..=30, 1..=8)) {
        let n = ps.len();
        let raw: Vec<(u8, u8)> = std::mem::take(&mut ps).into_iter().zip((1..=n as u8).rev()).collect();
        let instance = instance_of(&raw);
        let key = solve_keyseq(&instance).unwrap();
        let spt = solve_antithetical(&instance).unwrap();
        prop_assert_eq!(key.schedule.len(), n);
        prop_assert_eq!(key.schedule.objective, spt.objective);
    }

    #[test]
    fn instance_round_trip(raw in prop::collection::vec((0.0f64..1e6, 0.0f64..1e6), 0..20)) {
        let jobs = raw.iter().enumerate().map(|(i, &(p, w))| Job::new(format!("id-{i}"), p, w)).collect();
        let instance = normalize_instance(jobs).unwrap();
        let once = parse_instance(&emit_instance(&instance)).unwrap();
        prop_assert_eq!(&once, &instance);
        let twice = parse_instance(&emit_instance(&once)).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn random_feasible_orders_validate(raw in jobs_strategy(6), orders in prop::collection::vec(prop::collection::vec(0usize..6, 0..6), 1..10)) {
        let instance = instance_of(&raw);
        let orders: Vec<Vec<usize>> = orders
            .into_iter()
            .map(|o| o.into_iter().filter(|&i| i < instance.len()).unique().collect())
            .collect();
        for order in feasible_orders(&instance, &orders) {
            let s = build_schedule(&instance, &order).unwrap();
            prop_assert!(validate_schedule(&instance, &s).is_empty());
        }
    }
}

#[test]
fn equal_jobs_closed_forms_exact() {
    for n in 1..=12usize {
        let raw = vec![(3u8, 5u8); n];
        let instance = exact_instance_of(&raw);
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let wp = r(15);
        let all = solve_antithetical(&instance).unwrap();
        let pow = BigRational::new(BigInt::from(1), BigInt::from(1u64 << n));
        assert_eq!(all.objective, &wp * (r(1) - pow));
        let key = solve_keyseq(&instance).unwrap();
        assert_eq!(key.schedule.objective, &wp / r(2));
        assert_eq!(key.certificate(), &wp);
    }
}
