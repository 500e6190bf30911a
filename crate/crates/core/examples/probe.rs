use markov_core::triples::{is_markov, walk_tree};
use num_bigint::BigInt;
use std::time::Instant;
fn main() {
    for d in [18usize, 20, 22] {
        let t = Instant::now();
        let mut n = 0u64;
        walk_tree(d, |node, _| {
            let o = node.ordered();
            assert!(is_markov(
                &BigInt::from(o.small.clone()),
                &BigInt::from(o.mid.clone()),
                &BigInt::from(o.max.clone())
            ));
            n += 1;
            true
        });
        println!("depth {d}: {n} nodes {:?}", t.elapsed());
    }
}
