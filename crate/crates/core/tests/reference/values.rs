// @generated by tests/reference/generate.py (mpmath, 40 digits). Do not edit.
#![allow(dead_code, clippy::approx_constant)]

pub const GAMMA: &[((f64, f64), (f64, f64))] = &[
    ((1.0, 1.0), (0.49801566811835607, -0.15494982830181067)),
    ((0.5, 3.0), (0.021445670552430646, 0.006865364837261678)),
    ((2.5, -7.0), (-0.0021086008354232167, 0.00013036010541391394)),
    ((10.0, 20.0), (-0.13371397782847202, 0.12367497527124525)),
    ((0.1, 0.1), (4.520080204891075, -4.917313069142463)),
    ((-2.5, 1.5), (0.003412139564239149, -0.024053490434664735)),
    ((-0.5, 0.0), (-3.544907701811032, 0.0)),
    ((30.0, 45.0), (1.905823218538307e+19, 3.901691030288735e+18)),
    ((45.0, 1.0), (-2.0861828000683e+54, -1.599138497977803e+54)),
    ((0.75, -49.0), (-1.8636142623057572e-33, 1.635957225347588e-33)),
    ((3.0, 0.0), (2.0, 0.0)),
];

pub const ERFCX: &[((f64, f64), (f64, f64))] = &[
    ((-5.0, 0.0), (144009798674.66104, 0.0)),
    ((-5.0, 0.5), (31814116519.15793, 107548098303.85104)),
    ((-5.0, 2.2), (-1138648655.4539747, 10078926.209544348)),
    ((-5.0, 5.0), (1.8729666170960495, 0.46891096463246656)),
    ((-5.0, 12.0), (-0.016811986039351023, -0.040108726805084545)),
    ((-5.0, -3.3), (-35646.57284038307, 2684644.9851315375)),
    ((-2.0, 0.0), (108.94090438997797, 0.0)),
    ((-2.0, 0.5), (-35.63530351200189, -77.38014237534543)),
    ((-2.0, 2.2), (-0.8352737481807387, -0.637803047242921)),
    ((-2.0, 5.0), (-0.040643675714632996, -0.09798731254106442)),
    ((-2.0, 12.0), (-0.007699863524214249, -0.04588402563490717)),
    ((-2.0, -3.3), (-0.07917017690318713, 0.12542401222114605)),
    ((-0.5, 0.0), (1.952360489182557, 0.0)),
    ((-0.5, 0.5), (1.2220084158685705, -1.1893393085928645)),
    ((-0.5, 2.2), (-0.09313163756712291, -0.27891636983068235)),
    ((-0.5, 5.0), (-0.011900325512477153, -0.11397271859768673)),
    ((-0.5, 12.0), (-0.0019762436764948045, -0.04709755696226781)),
    ((-0.5, -3.3), (-0.029690314570220703, 0.17480058583007793)),
    ((0.0, 0.0), (1.0, 0.0)),
    ((0.0, 0.5), (0.7788007830714049, -0.47892517290104347)),
    ((0.0, 2.2), (0.007907054051593435, -0.2984684310011208)),
    ((0.0, 5.0), (1.3887943864964021e-11, -0.11524596183093659)),
    ((0.0, 12.0), (2.8946403116483003e-63, -0.047180778707018846)),
    ((0.0, -3.3), (1.864374233151685e-05, 0.18030210534718502)),
    ((0.3, 0.0), (0.7345993345676551, 0.0)),
    ((0.3, 0.5), (0.614851539146991, -0.3031243496473511)),
    ((0.3, 2.2), (0.05658572139510527, -0.28023234433712807)),
    ((0.3, 5.0), (0.007193662383676472, -0.11478396551148927)),
    ((0.3, 12.0), (0.0011870959561778177, -0.0471507845263489)),
    ((0.3, -3.3), (0.018222053004075596, 0.17824537052922446)),
    ((1.0, 0.0), (0.427583576155807, 0.0)),
    ((1.0, 0.5), (0.3912340214521361, -0.127202410884648)),
    ((1.0, 2.2), (0.11894063817039294, -0.21325294356899194)),
    ((1.0, 5.0), (0.023003132594059963, -0.11033283255357997)),
    ((1.0, 12.0), (0.003931535136350131, -0.04684966916103866)),
    ((1.0, -3.3), (0.05380089508153266, 0.16088578882998333)),
    ((2.5, 0.0), (0.2108063640611436, 0.0)),
    ((2.5, 0.5), (0.20472281871306905, -0.03619595012484993)),
    ((2.5, 2.2), (0.13052412918420372, -0.1053393303264061)),
    ((2.5, 5.0), (0.04677944021101474, -0.09050004267735243)),
    ((2.5, 12.0), (0.009477369220870115, -0.04518586113876297)),
    ((2.5, -3.3), (0.08590497802100155, 0.10682695245930132)),
    ((3.9, 0.0), (0.14031418160068973, 0.0)),
    ((3.9, 0.5), (0.13834148116674103, -0.01673737369848261)),
    ((3.9, 2.2), (0.10947619646297863, -0.05890140590535623)),
    ((3.9, 5.0), (0.05572336752071842, -0.06966716742597938)),
    ((3.9, 12.0), (0.013935321979127715, -0.04260668282771078)),
    ((3.9, -3.3), (0.08527034092828932, 0.06948267036487889)),
    ((4.1, 0.0), (0.133834116418652, 0.0)),
    ((4.1, 0.5), (0.1321090596859902, -0.01527929692118093)),
    ((4.1, 2.2), (0.10645228725880813, -0.05466860426860669)),
    ((4.1, 5.0), (0.05623375786465182, -0.0669444461778569)),
    ((4.1, 12.0), (0.014501312657373483, -0.042177139229026384)),
    ((4.1, -3.3), (0.08427044243353636, 0.06546555457973921)),
    ((6.0, 0.0), (0.09277656780053835, 0.0)),
    ((6.0, 0.5), (0.09217667645709819, -0.007482658737864886)),
    ((6.0, 2.2), (0.0823483992733601, -0.029489799904605596)),
    ((6.0, 5.0), (0.05577105489718028, -0.04572512027681846)),
    ((6.0, 12.0), (0.018921959268556082, -0.037632859530572174)),
    ((6.0, -3.3), (0.07211710674242584, 0.03884632605606675)),
    ((8.0, 0.0), (0.06998516620088092, 0.0)),
    ((8.0, 0.5), (0.06972284936251098, -0.004292337763204676)),
    ((8.0, 2.2), (0.06522557951328553, -0.017684536824176256)),
    ((8.0, 5.0), (0.050743677837035824, -0.031363955938247166)),
    ((8.0, 12.0), (0.021792015784539095, -0.03253067387961984)),
    ((8.0, -3.3), (0.060097259547596926, 0.024467362103274014)),
    ((15.0, 0.0), (0.03752960638850576, 0.0)),
    ((15.0, 0.5), (0.03748840757828526, -0.0012441263895399343)),
    ((15.0, 2.2), (0.036747625128262816, -0.005366444939901027)),
    ((15.0, 5.0), (0.033810739754306075, -0.011225540525074358)),
    ((15.0, 12.0), (0.022951811693477802, -0.01831181661626191)),
    ((15.0, -3.3), (0.035814459380080495, 0.007846102668414593)),
    ((29.0, 0.0), (0.019443267318222844, 0.0)),
    ((29.0, 0.5), (0.019437506321875846, -0.00033473222669430793)),
    ((29.0, 2.2), (0.01933233648042469, -0.0014648622124061562)),
    ((29.0, 5.0), (0.018883548563330976, -0.003252034980931179)),
    ((29.0, -3.3), (0.01919543629585374, 0.0021817515352067557)),
    ((0.0, 25.0), (3.6808558548018004e-272, -0.022585680912640474)),
    ((0.01, 29.0), (6.72055652021118e-06, -0.01946639807199847)),
    ((20.0, 20.0), (0.014113538470519282, -0.01409590764933707)),
    ((-3.0, 8.0), (-0.023593228127728124, -0.062041310364335016)),
    ((0.001, 0.001), (0.9988716223354113, -0.0011263806715998664)),
];

pub const ERFC: &[((f64, f64), (f64, f64))] = &[
    ((1.0, 0.0), (0.15729920705028513, 0.0)),
    ((0.7, 0.0), (0.32219880616258156, 0.0)),
    ((-0.7, 0.0), (1.6778011938374184, 0.0)),
    ((1.0, 1.0), (-0.31615128169794765, -0.19045346923783468)),
    ((-2.0, 0.5), (2.0035022433130365, -0.004740903031294336)),
    ((3.0, -2.0), (0.001036721143182731, -1.1546724379290603e-05)),
    ((0.2, 4.0), (-1243767.3535693374, -30492.14857646673)),
];

pub const GAMMA_TAYLOR_B: &[f64] = &[
    -0.5772156649015329,
    0.9890559953279725,
    -0.9074790760808863,
    0.9817280868344002,
    -0.9819950689031453,
    0.9931491146212762,
    -0.9960017604424315,
    0.998105693783129,
    -0.9990252676219549,
    0.9995156560727775,
    -0.9997565975086012,
    0.9998782713151333,
    -0.9999390642064443,
    0.9999695177634821,
    -0.999984752699377,
    0.9999923744790732,
    -0.9999961865894733,
    0.9999980930811309,
    -0.9999990464689111,
    0.9999995232106057,
    -0.9999997615973444,
    0.9999998807960192,
    -0.999999940397125,
    0.9999999701982676,
    -0.9999999850990354,
    0.999999992549485,
    -0.9999999962747316,
    0.9999999981373622,
    -0.9999999990686799,
    0.9999999995343395,
    -0.9999999997671696,
    0.9999999998835848,
    -0.9999999999417923,
    0.9999999999708962,
    -0.9999999999854481,
    0.999999999992724,
    -0.999999999996362,
    0.999999999998181,
    -0.9999999999990905,
    0.9999999999995453,
    -0.9999999999997726,
];

/// (label, ln z re, ln z im, mu, sigma, value)
pub const TRANSFORM: &[(&str, f64, f64, f64, f64, (f64, f64))] = &[
    (
        "z=2+i s=1",
        0.8047189562170501,
        0.4636476090008061,
        0.0,
        1.0,
        (0.1814090099529258, -0.09276534022458476),
    ),
    (
        "z=-1+i0 s=1",
        0.0,
        3.141592653589793,
        0.0,
        1.0,
        (0.445417463166174, -2.6018834418250374),
    ),
    (
        "z=-3+i0 s=0.5",
        1.0986122886681098,
        3.141592653589793,
        0.0,
        0.5,
        (-54.282770809696665, -21.037540178952373),
    ),
    (
        "z=-0.2+i0 s=2 mu=0.3",
        -1.6094379124341003,
        3.141592653589793,
        0.3,
        2.0,
        (0.8471562308840223, -0.6504067768636843),
    ),
    (
        "z=0.5i s=0.75",
        -0.6931471805599453,
        1.5707963267948966,
        0.0,
        0.75,
        (0.7282807058511044, -0.5029025438258155),
    ),
    (
        "z=1 s=1",
        0.0,
        0.0,
        0.0,
        1.0,
        (0.38175646475548336, 2.5150726652226773e-49),
    ),
    (
        "z=3 s=2",
        1.0986122886681098,
        0.0,
        0.0,
        2.0,
        (0.24162860490495375, 1.117182400563527e-49),
    ),
    (
        "z=10 s=0.25",
        2.302585092994046,
        0.0,
        0.0,
        0.25,
        (0.0002872984776987471, 4.387055933216617e-50),
    ),
    (
        "z=-10+i0 s=1",
        2.302585092994046,
        3.141592653589793,
        0.0,
        1.0,
        (0.36666471095674735, 0.41780093218943676),
    ),
    (
        "z=-81+i0 s=1",
        4.394449154672439,
        3.141592653589793,
        0.0,
        1.0,
        (-0.003343778032992513, 0.0032276173701898873),
    ),
    (
        "z=-2+5i s=1.5 mu=-0.4",
        1.683647914993237,
        1.9513027039072615,
        -0.4,
        1.5,
        (-2.9578057910409155e-05, -0.28266097037201404),
    ),
];

/// (t, mu, sigma, value)
pub const CHARACTERISTIC: &[(f64, f64, f64, (f64, f64))] = &[
    (1.0, 0.0, 1.0, (0.3403010857257816, 0.5071898416918059)),
    (0.01, 0.0, 1.0, (0.9996317300974996, 0.01647240030677385)),
    (2.0, 0.0, 1.0, (0.047377559320484396, 0.38321209139991996)),
    (10.0, 0.2, 0.5, (0.0134726091442572, 0.003561007094756235)),
];

/// (t, sigma, k, value) of the vertical-contour sin(pi s) Gamma(s) integral
pub const LEIPNIK: &[(f64, f64, f64, (f64, f64))] = &[
    (1.0, 1.0, 0.5, (-19.889898765366585, 13.239954659001747)),
    (0.01, 1.0, -1.0, (3.5732527553587253e-07, -2.726550788470174e-07)),
    (0.01, 1.0, 0.5, (3.5732527553587253e-07, -2.726550788470174e-07)),
];

/// (t, mu, sigma, U(t))
pub const THORIN: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.0, 1.0, 0.16051733845618874),
    (1.0, 0.0, 1.0, 0.41276096420149766),
    (10.0, 0.0, 1.0, 0.06651368511571178),
    (100.0, 0.0, 1.0, 0.007798596405464767),
    (1.0, 0.5, 0.8, 0.6611760948512662),
];

pub const SMALL_Z_BOUND_ALPHA10_SIGMA1: f64 = 0.002518387828806697;
