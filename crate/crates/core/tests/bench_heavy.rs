//! One-off timing probe for the heaviest weight-10 eliminations.
use std::time::Instant;
use ttcalc::homology::cohomology_space;

#[test]
#[ignore]
fn heavy_cohomology_at_weight_ten() {
    for deg in [2u8, 3, 4] {
        let t = Instant::now();
        let s = cohomology_space(deg, 10);
        println!(
            "degree -{deg} iw 10: dim {} (cycles {}, boundaries {}) in {:?}",
            s.dim,
            s.cycles.dim(),
            s.boundaries.dim(),
            t.elapsed()
        );
    }
}
