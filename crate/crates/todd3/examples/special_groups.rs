//! The 3-groups S = A ⋊ T for each case and the special subgroup Q.
use todd3::pgroups::{self, Case};

fn main() {
    for case in Case::ALL {
        let r = pgroups::s_report(case);
        println!("{:<8} |S| = {:>5}  |Z(S)| = {}  |[S,S]| = {}", case.name(), r.order, r.center_order, r.derived_order);
        match pgroups::unique_special_q(case) {
            Ok(q) => println!("         Q of shape {:?}, |Out_S(Q)| = {}", q.shape, q.out_s_q),
            Err(e) => println!("         {e}"),
        }
    }
}
