#![allow(dead_code)]

use sturmcert::expr::{parse_expr, Mode};
use sturmcert::poly::UniPoly;

pub const MU: &str = "1200*x^10+1200*x^9-1890*x^8-1854*x^7+938*x^6+987*x^5\
    +615/8*x^4-835/8*x^3-1659/16*x^2-297/16*x+401/128";

pub const NU: &str = "-1440000*x^26-2880000*x^25+7416000*x^24+17625600*x^23-14981700*x^22\
    -47224920*x^21+62018162/5*x^20+1799880978/25*x^19+922239083/250*x^18\
    -84199650417/1250*x^17-92661304227/5000*x^16+190171138621/5000*x^15\
    +762930005877/40000*x^14-107540100801/10000*x^13-810190932293/80000*x^12\
    -33113449049/80000*x^11+880096473123/320000*x^10+103309397713/80000*x^9\
    -236121121411/1280000*x^8-425398321107/1280000*x^7-840336154901/10240000*x^6\
    +19241962691/1280000*x^5+164343549777/10240000*x^4+18143739883/5120000*x^3\
    -428328477/1280000*x^2-119097/1024*x+160801/16384";

pub const MU_CHAIN: [&str; 4] = [
    "x^9+9/10*x^8-63/50*x^7-2163/2000*x^6+469/1000*x^5+329/800*x^4+41/1600*x^3\
     -167/6400*x^2-553/32000*x-99/64000",
    "x^8+5/6*x^7-25249/24300*x^6-2429/2700*x^5+43/6480*x^4+6091/38880*x^3\
     +473/2880*x^2+1951/64800*x-10619/1555200",
    "x^7+164171/403140*x^6-253857/134380*x^5-24703/26876*x^4+86929/161256*x^3\
     +104433/430016*x^2+24223/537520*x+50933/12900480",
    "-x^6-3617836265259/2968641792581*x^5+617789163720/2968641792581*x^4\
     +5544754493585/11874567170324*x^3-1101526123005/47498268681296*x^2\
     -244252761843/23749134340648*x+1195017616507/94996537362592",
];

pub const X_N2: &str = "262144*Y^20-1310720*Y^18+2785280*Y^16-3276800*Y^14+2329600*Y^12\
    -1025536*Y^10+275840*Y^8-43360*Y^6+3700*Y^4-150*Y^2+820/33*Y-1475/66";

pub fn poly(text: &str) -> UniPoly {
    parse_expr(text, Mode::Algebraic).expect("golden parses").to_poly(None).expect("single variable")
}
