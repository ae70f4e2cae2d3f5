//! Brute-force reference implementations used only by tests.
//!
//! Nothing here calls the solver code paths it is compared against: profiles
//! are enumerated by plain recursion, and every min/max is recomputed from
//! scratch by filtering the full profile list.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gnf_core::{Game, Payoff};

/// Cartesian product of `0..counts[i]`, last coordinate fastest.
pub fn all_profiles(counts: &[usize]) -> Vec<Vec<usize>> {
    fn go(counts: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == counts.len() {
            out.push(prefix.clone());
            return;
        }
        for s in 0..counts[prefix.len()] {
            prefix.push(s);
            go(counts, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(counts, &mut Vec::new(), &mut out);
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `π·p`: player `π(j)` plays what player `j` played in `p`.
pub fn act(pi: &[usize], p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (j, &s) in p.iter().enumerate() {
        q[pi[j]] = s;
    }
    q
}

fn u(g: &Game, p: &[usize], i: usize) -> Payoff {
    g.payoff(p, i).unwrap()
}

/// Symmetry checked against every permutation of the players.
pub fn symmetric_by_all_permutations(g: &Game) -> bool {
    let n = g.n_players();
    if (0..n).any(|i| g.labels(i) != g.labels(0)) {
        return false;
    }
    let profiles = all_profiles(&g.strategy_counts());
    permutations(n).iter().all(|pi| {
        profiles.iter().all(|p| {
            let q = act(pi, p);
            (0..n).all(|i| u(g, p, i) == u(g, &q, pi[i]))
        })
    })
}

/// Profiles where no unilateral deviation strictly helps anyone.
pub fn nash_by_deviation_scan(g: &Game) -> Vec<Vec<usize>> {
    let counts = g.strategy_counts();
    all_profiles(&counts)
        .into_iter()
        .filter(|p| {
            (0..g.n_players()).all(|i| {
                (0..counts[i]).all(|t| {
                    let mut q = p.clone();
                    q[i] = t;
                    u(g, &q, i) <= u(g, p, i)
                })
            })
        })
        .collect()
}

fn extremes_over(g: &Game, alive: &[Vec<usize>], i: usize, s: usize) -> (Payoff, Payoff) {
    let values: Vec<Payoff> = all_profiles(&g.strategy_counts())
        .into_iter()
        .filter(|p| p[i] == s && p.iter().enumerate().all(|(j, x)| alive[j].contains(x)))
        .map(|p| u(g, &p, i))
        .collect();
    (*values.iter().min().unwrap(), *values.iter().max().unwrap())
}

pub fn full_sets(g: &Game) -> Vec<Vec<usize>> {
    g.strategy_counts()
        .iter()
        .map(|&k| (0..k).collect())
        .collect()
}

pub fn maximin_by_scan(g: &Game) -> Vec<Payoff> {
    let alive = full_sets(g);
    (0..g.n_players())
        .map(|i| {
            (0..g.strategy_count(i))
                .map(|s| extremes_over(g, &alive, i, s).0)
                .max()
                .unwrap()
        })
        .collect()
}

pub fn ir_by_scan(g: &Game) -> Vec<Vec<usize>> {
    let floor = maximin_by_scan(g);
    all_profiles(&g.strategy_counts())
        .into_iter()
        .filter(|p| (0..g.n_players()).all(|i| u(g, p, i) >= floor[i]))
        .collect()
}

/// Pairs `(player, strategy)` currently minimax-dominated by some alive strategy.
pub fn dominated_by_scan(g: &Game, alive: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..g.n_players() {
        for &s in &alive[i] {
            let (_, hi) = extremes_over(g, alive, i, s);
            if alive[i]
                .iter()
                .any(|&v| extremes_over(g, alive, i, v).0 > hi)
            {
                out.push((i, s));
            }
        }
    }
    out
}

/// Fixed point of simultaneous deletion.
pub fn batch_survivors_by_scan(g: &Game) -> Vec<Vec<usize>> {
    let mut alive = full_sets(g);
    loop {
        let dead = dominated_by_scan(g, &alive);
        if dead.is_empty() {
            return alive;
        }
        for (i, s) in dead {
            alive[i].retain(|&x| x != s);
        }
    }
}

/// Endpoints reached by every possible one-at-a-time deletion order.
pub fn all_sequential_endpoints(g: &Game) -> BTreeSet<Vec<Vec<usize>>> {
    fn go(g: &Game, alive: Vec<Vec<usize>>, out: &mut BTreeSet<Vec<Vec<usize>>>) {
        let dead = dominated_by_scan(g, &alive);
        if dead.is_empty() {
            out.insert(alive);
            return;
        }
        for (i, s) in dead {
            let mut next = alive.clone();
            next[i].retain(|&x| x != s);
            go(g, next, out);
        }
    }
    let mut out = BTreeSet::new();
    go(g, full_sets(g), &mut out);
    out
}

/// Diagonal profiles with the largest player-0 payoff.
pub fn hofstadter_by_scan(g: &Game) -> Vec<Vec<usize>> {
    let n = g.n_players();
    let diag: Vec<Vec<usize>> = (0..g.strategy_count(0)).map(|k| vec![k; n]).collect();
    let top = diag.iter().map(|p| u(g, p, 0)).max().unwrap();
    diag.into_iter().filter(|p| u(g, p, 0) == top).collect()
}
