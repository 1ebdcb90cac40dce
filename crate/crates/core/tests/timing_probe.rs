use std::time::Instant;
use mahler_zero::corpus;
use mahler_zero::zeroorder::mg_annihilator;

#[test]
fn timing_probe() {
    for (mid, m) in corpus::builtin_mahler() {
        for (gid, g) in corpus::builtin_algebraic() {
            let t0 = Instant::now();
            let (ann, profile) = mg_annihilator(&m, &g).unwrap();
            eprintln!(
                "{}x{}: {:?} deg_y={} deg_z={} ",
                mid, gid, t0.elapsed(), profile.delta_y, profile.delta_z
            );
            let _ = ann;
        }
    }
}
