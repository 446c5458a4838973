//! A curve linking K_6 in the star 0|1 2|3 4 5: prints which triangles it links and how.

use linkweave::construct::{build_star_cone, curve_link_map};
use linkweave::graphs::all_triangles;
use linkweave::stars::{detect_star, Star};

fn main() {
    let star: Star = "0|1 2|3 4 5".parse().expect("valid star");
    let (curve, k6) = build_star_cone(6, &star).expect("construction succeeds");
    let map = curve_link_map(&curve, &k6).expect("valid embedding");
    println!("curve with {} vertices against K_6", curve.len());
    for t in all_triangles(6) {
        let v = map.get(&t);
        if v != 0 {
            println!("  {t}: {v:+}");
        }
    }
    let found = detect_star(&map).expect("valid map").expect("a star");
    println!("detected star {} (matches: {})", found.literal(), found == star);
}
