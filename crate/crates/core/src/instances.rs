//! Instance generation for exhaustive and randomized testing: every valid
//! rank table of a small ground, and a seeded random sampler built from
//! capped weighted sums truncated to the type box.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ground::GroundData;
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// Every polymatroid of the given ground data, by exhaustive search over
/// tables with local pruning plus a final validation.
pub fn enumerate_polymatroids(ground: &GroundData) -> Vec<Polymatroid> {
    let size = ground.subset_count();
    let mut table = vec![0i64; size];
    let mut out = Vec::new();
    fn rec(ground: &GroundData, table: &mut Vec<i64>, bits: usize, out: &mut Vec<Polymatroid>) {
        let size = ground.subset_count();
        if bits == size {
            if let Ok(p) = Polymatroid::validate(ground.clone(), table) {
                out.push(p);
            }
            return;
        }
        let s = Subset(bits as u32);
        if s.len() == 1 {
            let i = s.iter().next().unwrap();
            for v in 0..=ground.type_of(i) as i64 {
                table[bits] = v;
                rec(ground, table, bits + 1, out);
            }
        } else {
            let lower = s.iter().map(|i| table[s.remove(i).index()]).max().unwrap();
            let upper = s
                .iter()
                .map(|i| table[s.remove(i).index()] + table[Subset::singleton(i).index()])
                .min()
                .unwrap();
            for v in lower..=upper {
                table[bits] = v;
                rec(ground, table, bits + 1, out);
            }
        }
    }
    table[0] = 0;
    rec(ground, &mut table, 1, &mut out);
    out
}

/// A seeded random polymatroid: a short sum of capped modular functions,
/// truncated to the type box. Always valid; loops occur when a weight or the
/// type is zero.
pub fn random_polymatroid(ground: &GroundData, rng: &mut ChaCha8Rng) -> Polymatroid {
    let m = ground.m();
    let n = ground.n();
    let pieces = rng.gen_range(1..=3usize);
    let caps: Vec<u32> = (0..pieces).map(|_| rng.gen_range(0..=n)).collect();
    let weights: Vec<Vec<u32>> = (0..pieces)
        .map(|_| (0..m).map(|_| rng.gen_range(0..=2u32)).collect())
        .collect();
    let raw = |s: Subset| -> i64 {
        (0..pieces)
            .map(|k| {
                let total: u32 = s.iter().map(|i| weights[k][i]).sum();
                total.min(caps[k]) as i64
            })
            .sum()
    };
    let table: Vec<i64> = Subset::all(m)
        .map(|s| {
            s.subsets()
                .map(|t| {
                    let boxed: i64 = s.minus(t).iter().map(|i| ground.type_of(i) as i64).sum();
                    raw(t) + boxed
                })
                .min()
                .unwrap()
        })
        .collect();
    Polymatroid::validate(ground.clone(), &table).expect("truncated capped sums are valid")
}

/// A seeded random nonempty-subset sequence of the given length.
pub fn random_sets(m: usize, len: usize, rng: &mut ChaCha8Rng) -> Vec<Subset> {
    (0..len)
        .map(|_| Subset(rng.gen_range(1..(1u32 << m))))
        .collect()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
