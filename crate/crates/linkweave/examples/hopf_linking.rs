//! Exact linking numbers of the reference curve pairs, with the Gauss integral alongside.

use linkweave::geom::fixtures::{doubled_thread_pair, hopf_pair, split_pair};
use linkweave::geom::{gauss_linking_raw, linking_details};

fn main() {
    for (name, (a, b)) in [("split", split_pair()), ("hopf", hopf_pair()), ("doubled thread", doubled_thread_pair())] {
        let d = linking_details(&a, &b).expect("fixtures are disjoint and simple");
        let g = gauss_linking_raw(&a, &b);
        println!(
            "{name:>15}: lk = {:+} from {} crossings (shear {}), Gauss {:.6} ± {:.1e}",
            d.value,
            d.crossings.len(),
            d.shear,
            g.value,
            g.error_bound
        );
    }
}
