//! Exhaustive listing of small multiplicative lattices, plus seeded random
//! sampling for sizes beyond exhaustive reach.
//!
//! Lattice orders are listed once per isomorphism class. Multiplication
//! tables are not reduced modulo automorphisms of the order.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::LatticeError;
use crate::lattice::{Condition, MulLattice};
use crate::order::{Elem, LatticeOrder};

/// Largest size accepted by [`enumerate_mul_lattices`].
pub const EXHAUSTIVE_CAP: usize = 5;

/// Largest size accepted by [`lattice_orders`].
pub const ORDER_CAP: usize = 7;

/// Largest size accepted by [`sample_mul_lattices`].
pub const SAMPLE_CAP: usize = 10;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// One representative of every isomorphism class of lattices with `n`
/// elements, each with bottom `0` and top `n - 1`, in a fixed order.
pub fn lattice_orders(n: usize) -> Result<Vec<LatticeOrder>, LatticeError> {
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > ORDER_CAP {
        return Err(LatticeError::CapExceeded { requested: n, cap: ORDER_CAP });
    }
    if n <= 2 {
        return Ok(vec![LatticeOrder::chain(n)?]);
    }
    let inner: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&i| inner.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    let perms = permutations(inner.len());
    let mut classes: BTreeMap<Vec<bool>, ()> = BTreeMap::new();

    // Naturally labelled posets: i < j in the order implies i < j as integers.
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![false; n * n];
        for x in 0..n {
            rel[x * n + x] = true;
            rel[x] = true;
            rel[x * n + n - 1] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                rel[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !rel[x * n + y] || (0..n).all(|z| !rel[y * n + z] || rel[x * n + z]))
        });
        if !transitive || LatticeOrder::from_fn(n, |x, y| rel[x * n + y]).is_err() {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                let relabel = |x: usize| if x == 0 || x == n - 1 { x } else { 1 + p[x - 1] };
                let mut k = vec![false; n * n];
                for x in 0..n {
                    for y in 0..n {
                        k[relabel(x) * n + relabel(y)] = rel[x * n + y];
                    }
                }
                k
            })
            .min()
            .expect("at least one permutation");
        classes.insert(key, ());
    }
    classes
        .into_keys()
        .map(|k| LatticeOrder::from_fn(n, |x, y| k[x * n + y]))
        .collect()
}

/// Number of multiplication tables on `order` satisfying `xy ≤ x ∧ y`:
/// the product over all pairs of the size of the down-set of `x ∧ y`.
pub fn mul_table_count(order: &LatticeOrder) -> u128 {
    order
        .elements()
        .flat_map(|x| order.elements().map(move |y| (x, y)))
        .map(|(x, y)| order.down_set(order.meet(x, y)).len() as u128)
        .product()
}

/// Every multiplication table on a fixed order, in mixed-radix order.
#[derive(Clone, Debug)]
pub struct MulTables {
    order: LatticeOrder,
    choices: Vec<Vec<Elem>>,
    digits: Vec<usize>,
    done: bool,
}

impl MulTables {
    pub fn new(order: LatticeOrder) -> Self {
        let n = order.len();
        let choices = (0..n * n).map(|i| order.down_set(order.meet(i / n, i % n))).collect();
        MulTables { order, choices, digits: vec![0; n * n], done: false }
    }
}

impl Iterator for MulTables {
    type Item = MulLattice;

    fn next(&mut self) -> Option<MulLattice> {
        if self.done {
            return None;
        }
        let mult = self.digits.iter().zip(&self.choices).map(|(&d, c)| c[d]).collect();
        let item = MulLattice::from_flat(self.order.clone(), mult)
            .expect("products are drawn from the down-set of the meet");
        // Advance with the last pair as the fastest digit.
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.choices[i].len() {
                break;
            }
            self.digits[i] = 0;
        }
        Some(item)
    }
}

/// Every multiplicative lattice with at most `max_n` elements whose profile
/// satisfies `filter`, smallest sizes first.
pub fn enumerate_mul_lattices(
    max_n: usize,
    filter: &[Condition],
) -> Result<impl Iterator<Item = MulLattice>, LatticeError> {
    if max_n > EXHAUSTIVE_CAP {
        return Err(LatticeError::CapExceeded { requested: max_n, cap: EXHAUSTIVE_CAP });
    }
    let mut orders = Vec::new();
    for n in 1..=max_n {
        orders.extend(lattice_orders(n)?);
    }
    let filter = filter.to_vec();
    Ok(orders
        .into_iter()
        .flat_map(MulTables::new)
        .filter(move |l| filter.is_empty() || l.condition_profile().satisfies(&filter)))
}

/// A random lattice order on exactly `n` elements, drawn as the intersection
/// closure of random subsets of a small ground set.
pub fn random_lattice_order<R: Rng>(n: usize, rng: &mut R) -> Result<LatticeOrder, LatticeError> {
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > SAMPLE_CAP {
        return Err(LatticeError::CapExceeded { requested: n, cap: SAMPLE_CAP });
    }
    if n <= 2 {
        return LatticeOrder::chain(n);
    }
    loop {
        let ground = rng.gen_range(2..=(n - 1).min(6));
        let full: u32 = (1 << ground) - 1;
        let gens = rng.gen_range(1..=n);
        let mut family: Vec<u32> = vec![full];
        for _ in 0..gens {
            family.push(rng.gen_range(0..=full));
        }
        // Close under pairwise intersection.
        loop {
            let mut grown = false;
            for i in 0..family.len() {
                for j in 0..i {
                    let m = family[i] & family[j];
                    if !family.contains(&m) {
                        family.push(m);
                        grown = true;
                    }
                }
            }
            if !grown {
                break;
            }
        }
        family.sort_unstable();
        family.dedup();
        if family.len() != n {
            continue;
        }
        family.sort_by_key(|s| (s.count_ones(), *s));
        return LatticeOrder::from_fn(n, |x, y| family[x] & !family[y] == 0);
    }
}

/// A random multiplication on `order`: each product is drawn uniformly from
/// the down-set of the corresponding meet.
pub fn random_mul_lattice<R: Rng>(order: LatticeOrder, rng: &mut R) -> MulLattice {
    let n = order.len();
    let mult = (0..n * n)
        .map(|i| {
            let down = order.down_set(order.meet(i / n, i % n));
            *down.choose(rng).expect("down-sets are nonempty")
        })
        .collect();
    MulLattice::from_flat(order, mult).expect("products are drawn below the meet")
}

/// `count` random multiplicative lattices with sizes drawn from `sizes`;
/// the sequence is a pure function of `seed`.
pub fn sample_mul_lattices(
    sizes: &[usize],
    count: usize,
    seed: u64,
) -> Result<Vec<MulLattice>, LatticeError> {
    if sizes.is_empty() {
        return Err(LatticeError::Shape("no sizes to sample from".into()));
    }
    if let Some(&n) = sizes.iter().find(|&&n| n == 0 || n > SAMPLE_CAP) {
        return Err(if n == 0 {
            LatticeError::Empty
        } else {
            LatticeError::CapExceeded { requested: n, cap: SAMPLE_CAP }
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = *sizes.choose(&mut rng).expect("nonempty");
            let order = random_lattice_order(n, &mut rng)?;
            Ok(random_mul_lattice(order, &mut rng))
        })
        .collect()
}
