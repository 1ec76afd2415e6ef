// Reference values of E_{α,β}(z): (alpha, beta, re z, im z, re E, im E).
// Power series summed in arbitrary precision with working digits scaled to |z|^{1/α}.
pub const ML_REFERENCE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (1.0, 0.5, 104.35471799074844, 0.0, 2.137638330676904e+46, 0.0),
    (2.0, -0.5, -187.18027879161696, 0.0, -47.88619889872297, 0.0),
    (0.75, -0.5, -44.259291672446366, -17.23810680359663, 0.004998781201569683, -0.001939446088580162),
    (2.0, -0.5, 136.115411659929, 0.0, 2324071.4794259593, 0.0),
    (0.5, 1.0, 9.117240243438529, 2.3828353607913537, 7.425739208530336e+33, -4.3761637833830474e+33),
    (0.5, -0.5, 7.6170309984100095, 9.080458153458514, 0.00047290974045135375, 0.002983541296403163),
    (0.25, 2.0, -0.15792080226504482, -0.5560507601661603, 0.7396070809819311, -0.3237923046569923),
    (1.0, 1.3, -137.5089432727246, 0.0, 0.0024434472970937212, 0.0),
    (0.75, -0.5, 48.287893594512354, 7.709171566621935, 2.7343565414747347e+79, 2.2795247063522716e+78),
    (0.9, 2.0, -123.28951142265981, -112.98905173487529, 0.004633205909125372, -0.004238909629444096),
    (0.5, 1.3, -9.463721728450919, 0.0, 0.08685732076671113, 0.0),
    (1.0, 1.0, 128.60565544639672, 86.65787613700262, 1.8595140073227595e+55, -6.877077086650094e+55),
    (0.25, 1.0, -2.4682447180220284, 0.0, 0.2550431809937766, 0.0),
    (2.0, 2.5, 37.60011084167065, -170.24342591346598, 174.0247535812685, -254.23827456259386),
    (0.1, 1.3, 0.6575994359664661, 0.5504433214792233, 0.8961735307821568, 1.5000713168800541),
    (0.9, 0.5, 109.88282652994008, -82.07372723277898, -2.344547728310365e+78, 1.1959498820732455e+79),
    (0.5, 1.3, -9.146390089277977, 0.0, 0.08972557049108836, 0.0),
    (1.75, 1.0, -156.2399464400695, 13.317573791800518, 0.008710777034602865, -0.018210736140446205),
    (0.75, 0.5, 12.622330321151951, 0.0, 41932322470038.32, 0.0),
    (2.0, 0.5, -78.44446213497748, -2.0183113523042744, -2.9200763660103113, 0.05465110414703588),
    (2.0, 1.0, 70.63246500738478, 180.02614278314084, 958.8248272209155, 48834.83289410287),
    (0.1, 1.3, -0.30747537717761547, 1.6135357877143521, 0.32964806105257766, 0.4153937318324635),
    (1.25, 1.3, 105.1223096254926, 0.0, 2.5846489343931658e+17, 0.0),
    (0.25, 0.5, -1.8074701449881927, -1.4939047038764475, 0.0922702225557471, -0.06504201534980951),
    (2.0, 0.5, 129.35882163934014, 0.0, 146693.73923017352, 0.0),
    (0.75, 2.0, 24.148219847087773, 27.18675725876199, 2.4747059498780685e+20, 2.5932693216126543e+20),
    (1.5, -0.5, 43.97743980422736, -3.303203054657154, 5844562.621064729, -4908735.16550771),
    (0.9, -0.5, 0.08959726173167654, 43.70286410872035, 0.003334716620190301, 0.002934971951155976),
    (0.5, 2.0, -1.1806014987020081, 0.3755371668541268, 0.5005462529506044, 0.08096895049106047),
    (1.75, -0.5, 164.76151248296551, 0.0, 4833155429.915087, 0.0),
    (0.9, 2.0, -41.842372467806484, -72.86977502852757, 0.006245008357121991, -0.010821464042462845),
    (1.75, 1.0, 110.40832514586211, 95.17462130529513, 3689595.0270018554, 2169154.669379507),
    (0.75, 0.5, -62.6458008267069, 0.0, -0.0032550556516671115, 0.0),
    (1.0, 2.5, -16.76874049178325, 0.0, 0.06521798893228781, 0.0),
    (2.0, 1.0, -105.06825220979341, 43.89176142504241, -2.1003616365791866, -3.4554284943093423),
    (1.0, -0.5, -69.40073359052603, 0.0, 0.0063285761490104835, 0.0),
    (2.0, 2.0, 175.61476703378304, -22.77583871544989, 15427.907217493534, -15666.087726397578),
    (0.25, 2.5, 0.7209525994229828, -0.6076814575341146, 0.7688475494762269, -0.9409262992003774),
    (0.5, 1.3, 7.2720539009110166, -12.746040521663868, -0.028272915264514763, -0.052180999456065184),
    (1.25, 1.3, -99.72237567186204, 34.635725174971945, 0.0004446209898274046, 0.00014742114288504636),
    (0.5, -0.5, -3.8143485056075237, 2.59742569527931, -0.008650296892327058, -0.016803763372355996),
    (2.0, 1.3, 87.94182135584556, -120.391873473032, 7893.5241749813085, 9840.897648393919),
    (0.1, 2.5, 1.2897748701179905, 0.21743526688345644, -1.9160759077888985, 1.625307881762327),
    (0.75, 0.5, -1.3670153508434624, -5.738490835760743, -0.009116722192257726, 0.034117325000469226),
    (1.0, 1.0, -130.66109673292632, 0.0, 1.797242539365525e-57, 0.0),
    (1.5, 2.5, -113.08803720426151, 77.5875707862571, 0.006071894851449714, 0.003959526916058261),
    (1.75, 0.5, -128.5488211513456, 0.0, -0.08539357945085133, 0.0),
    (0.5, 2.0, -0.35877926371404645, 0.0, 0.7828988081336968, 0.0),
    (0.25, 2.0, 0.24443075509545426, 0.5398269285678486, 0.9411794380759194, 0.5735510468837944),
    (0.25, 2.0, 0.5590426274644031, 0.0, 1.923101035280716, 0.0),
    (1.5, 2.0, -16.31471911543675, 0.0, 0.026529408593188, 0.0),
    (1.75, 2.0, 44.08620146722164, 117.1844906704847, -6939.42888969343, 248.79568049859776),
    (1.5, 2.0, 60.14539532352056, 182.0587310060483, 23838291.859542385, -97096722.98949088),
    (0.9, 2.0, -45.97697195573713, -149.74765104025536, 0.001976895954891819, -0.006409751030506288),
    (1.25, 1.3, 42.445570011091625, 78.55356440763447, -3067268591.2036867, 4466970719.721403),
    (0.9, -0.5, -88.79449325129332, -129.68540624211943, 0.0013412077375784448, -0.002000324683460561),
    (0.5, 1.0, -15.87360470738656, 0.0, 0.035472511902193075, 0.0),
    (1.25, 1.3, -56.12793424450088, 0.0, 0.0008436364732797023, 0.0),
    (1.75, 1.3, -31.365328856082883, -88.41683546559136, 67.5079487087488, 105.36795221137403),
    (0.1, 1.0, -1.1700287486840832, 0.0, 0.4463482359111494, 0.0),
    (2.0, 1.0, -115.14183893654034, -49.21864387515829, -0.156800726914236, 4.663868257836567),
    (0.25, -0.5, -1.5944932563418717, -0.40500564143043233, -0.10188849421641973, 0.018656460339171146),
    (0.5, 1.3, 6.931064725540868, 13.811174260857142, -0.024142096015946267, 0.050813987809535256),
    (1.75, 2.0, 135.0390982208355, 0.0, 505964.8409666361, 0.0),
    (0.5, 1.3, 16.03000342316585, 0.0, 1.495610219032439e+111, 0.0),
    (0.9, -0.5, -119.73754094896171, 0.0, 0.0031896165606872594, 0.0),
    (0.1, 1.0, 1.5318500397928159, -0.8704331395633644, -0.522430308421746, -0.7148015130671939),
    (0.1, 2.0, -1.2873985176330451, 0.5273393452533027, 0.4256847118659754, 0.0965000136639261),
    (0.5, 0.5, 11.388469968818454, 11.926332946489792, -0.00011874195789724439, -0.0009468928200460699),
    (1.5, 2.0, 19.474521673037813, -150.18928939279724, -256294.13241625045, 91470.94992167054),
    (0.1, -0.5, 0.10798663973985881, 0.003837838210506876, -0.3140197961344385, -0.0012472298724335645),
    (0.75, 1.3, -6.29834063550739, 13.623892252222204, 0.016819312187199557, 0.03801326173891056),
    (1.25, 2.0, -87.65996339587954, 0.0, 0.009346501203387736, 0.0),
    (0.5, 1.3, 17.192247630384188, 0.0, 8.427867858374564e+127, 0.0),
    (0.9, 1.3, -41.12449368257262, -24.141763319202425, 0.008213135543399004, -0.004897941277235768),
    (0.9, 2.0, 16.798739766073794, -60.56969990781049, -3054.117972352727, -141.72689345852604),
    (1.5, -0.5, -76.32012773677958, 18.685282949217655, 0.027652940988117224, 0.07187243070297271),
    (0.75, -0.5, 70.34286324638198, 0.0, 8.469951304947067e+129, 0.0),
    (1.25, -0.5, -118.71001332310772, 0.0, 0.0030442880620024683, 0.0),
    (0.1, -0.5, 0.6966731298103085, 0.0, -0.5291593339837194, 0.0),
    (0.1, 1.0, -0.08290569263696157, -0.7645923002836494, 0.5928822910190129, -0.4432486272711006),
    (0.5, 2.5, -3.3958859063177034, 15.634301396177566, 0.017126404997159856, 0.05906233270112454),
    (1.5, 0.5, -82.8975685299379, 0.0, 0.0002521086323441076, 0.0),
    (1.75, 2.5, 33.49349962972514, 105.45156004963385, -452.6736422908184, 447.6193200000822),
    (1.75, 2.0, -59.37427370078787, 165.97335296038344, -193.8699144245016, -52.6490691651091),
    (0.75, -0.5, -4.261876857884151, -4.718974255121286, 0.03337828131696104, -0.02855788382831683),
    (1.5, 2.0, -24.658489710850496, -2.9328348739210517, 0.02422587334380743, -0.002126252428310891),
    (0.9, -0.5, -88.6620949907737, -41.79737866921015, 0.0035162483161173333, -0.0016928935531566353),
    (0.25, 2.5, 0.07124491662653756, 2.653433155356142, 0.11651394477248057, 0.2874689371550785),
    (0.9, 0.5, -37.75702403925496, -130.62742441872226, -0.0005346397653255603, 0.0019062474215713627),
    (1.5, 1.3, 33.15467318123342, 0.0, 10043.670749358374, 0.0),
    (0.75, -0.5, 24.769015423722706, -43.88927933226205, -2.966062258044349e+16, 1.5780246856848106e+16),
    (2.0, 2.0, 48.53755566683827, -5.383072258021643, 72.56937822191209, -24.898610574839807),
    (0.25, 2.5, 1.428389867318206, -0.09334233732709944, 18.5838235489619, -17.529293834615753),
    (1.5, 1.3, -165.9850938389938, 6.9916716109152715, -0.0010470244467651187, -4.458304645406935e-05),
    (0.25, 1.3, 0.23707760240459094, -0.06250799783576207, 1.449194119473766, -0.11565155245738687),
    (1.5, 1.0, 102.87468477129167, 0.0, 2285421904.8375554, 0.0),
    (0.25, 0.5, 0.251653626949668, -3.385368295983277, -0.004976174881028423, -0.08625454747822993),
    (1.75, 1.0, -183.87779327382478, 0.0, 0.012427959981510637, 0.0),
    (1.5, 1.3, -15.047247163825597, -0.33955712180562697, -0.014778204214409906, 0.0033332367622327715),
    (0.9, 2.5, 23.92363060715742, -35.70203995091932, 26576856997.519108, 9208651067.035017),
    (0.1, 1.0, -1.447279470392242, 0.0, 0.39437307519495834, 0.0),
    (0.1, 2.5, 0.5164003326803417, -0.534748971380652, 0.7591708032482531, -0.7257711398855492),
    (2.0, -0.5, 97.95805503784446, 0.0, 309475.3010980857, 0.0),
    (0.25, -0.5, 0.8140018211189172, -3.575789241840943, 0.013720827936804696, 0.06060021099962545),
    (0.9, 1.3, -39.11232717785248, -98.51384448636439, 0.0015509289612965517, -0.003970213075584649),
    (0.1, 2.5, -0.6616723623842676, 0.6556627261810231, 0.40717902198304734, 0.15410872649410579),
    (0.25, -0.5, 3.3603556916043194, -2.1063952445951717, 0.04601725961479754, 0.0221264312579476),
    (0.9, 1.3, -20.53066729793335, 0.0, 0.022675600234927252, 0.0),
    (1.0, 1.0, 5.897936305005935, 85.45087947147864, -294.8070259401079, -213.99140032867575),
    (0.75, 1.0, -43.322995692626655, 0.0, 0.006519924470266322, 0.0),
    (0.25, 0.5, -0.9711838727734616, 2.3730074082184194, 0.05028093817100319, 0.09873918798494191),
    (1.0, 1.3, -110.31397506760896, 0.0, 0.00304972605862885, 0.0),
    (1.75, -0.5, 60.86727982300896, -66.21595224180302, 2856851.693968954, -1147781.5490320018),
    (0.1, 2.5, 1.1897156314189452, -1.0779485309940982, -0.08668261999925211, -0.7406608767959186),
    (0.9, 1.0, 138.9239164449192, -1.6184915101166009, -2.703864534667155e+104, -8.1673790124066735e+102),
    (1.75, 2.0, -144.67326760122424, 0.0, 0.0008405489149061361, 0.0),
    (0.75, 1.3, 35.76589551278157, -12.659019123463162, 1.2430009559914672e+49, 1.338598418915146e+49),
    (0.1, 0.5, 0.04021957152082816, 0.15467286926020501, 0.5720060965944488, 0.11044379456241245),
    (2.0, 1.3, 0.369553473047117, -0.2998182272160079, 1.2531455333693802, -0.11762443090314009),
    (1.5, 1.3, -75.45986022204289, 0.0, -0.002390451982009765, 0.0),
    (0.25, 2.5, 3.2455218431701143, 0.0, 5.2544606014667144e+45, 0.0),
    (0.1, -0.5, -0.1627445963887432, -1.480694305857129, -0.08968172087091214, 0.12161594529032813),
    (0.9, 0.5, 120.32653238757959, 21.5875579070658, -1.0163281685246125e+90, -1.2447225097693516e+89),
    (0.25, -0.5, -1.7931595541165108, 0.0, -0.09633438238368484, 0.0),
    (2.0, -0.5, 2.6140026540428574, -7.790856397381959, -21.30690851187663, -12.728820381633358),
    (0.75, 1.3, -45.99296661760024, 0.0, 0.013534069270407867, 0.0),
    (0.9, -0.5, 11.644697594195094, -0.12363682618958531, 286521196.3083388, -57528595.11356798),
    (0.9, 0.5, 127.77885569743714, 0.0, 2.192464878786465e+96, 0.0),
    (1.0, 2.5, -109.07049661408617, 0.0, 0.010297765662751923, 0.0),
    (1.75, -0.5, -64.8255578773579, 12.425952150416819, 4.299109330705675, 4.01795439369546),
    (0.75, 1.3, -25.091351477752337, 0.0, 0.02492912597273546, 0.0),
    (1.5, 2.0, -10.329685469391396, -61.051862608307985, 18.275163596301358, -12.978884419645384),
    (2.0, 0.5, -188.93674529860616, 0.0, -1.4199276055880028, 0.0),
    (1.25, -0.5, -63.299820334431715, -144.04956883434346, -129.68813302426173, -13.762568629234169),
    (1.0, 2.5, -43.52486418219125, 0.0, 0.02562356850277041, 0.0),
    (1.75, 2.5, 44.49731769898004, -108.72354027240935, -857.1674794416238, -1104.6067805868186),
    (1.0, 1.3, -57.67926580111268, 0.0, 0.005867880986596834, 0.0),
    (0.25, 2.0, -1.0729620356706322, -3.9126869762674104, 0.1169355451078744, -0.21548280169309497),
    (1.25, -0.5, 23.971488290483023, -4.034221542792577, -4099816.7635285263, -11700587.23480296),
    (0.75, 1.0, -35.54836935198203, 0.0, 0.007987772660894359, 0.0),
    (1.25, -0.5, 100.76546826671631, 0.0, 5.040051402797888e+19, 0.0),
    (0.75, 2.5, 8.185889243304974, 6.400542185682711, -18630.907155416113, -10439.144894155132),
    (2.0, -0.5, 16.304931341819014, 76.63502524556452, 12200.282196408945, 3874.326498303651),
    (0.1, 2.5, -1.2581746467004586, 0.728595365505256, 0.3153243741296706, 0.0987067368979882),
    (0.1, 0.5, 0.07956721815058594, 0.3620600382960631, 0.5110088409290777, 0.2446636081959359),
    (0.9, 1.3, 146.94165846063734, 0.0, 2.6649956874432473e+110, 0.0),
    (0.9, 2.5, 110.64469967432328, 88.36283964128343, -3.2197812166752756e+74, 1.7575107828421885e+74),
    (1.0, 2.0, -10.999060557893001, -32.00225402680666, 0.009605254356608913, -0.0279460721634863),
    (0.25, 2.5, 0.36807509204217204, 0.12626474405744695, 1.0546653756240634, 0.15369136761308402),
    (0.25, -0.5, -1.642206317638686, 0.0, -0.1027976689409214, 0.0),
    (1.5, 0.5, 62.73941759552091, -36.13120383843736, 33713154.64034843, 6124224.351660136),
    (1.75, 2.5, -164.97803046494775, 0.0, 0.004727542324697302, 0.0),
    (0.9, 1.0, 4.217509935017707, -64.85508015592573, -0.00016409290301785956, -0.0016291350730889371),
    (0.75, 0.5, 29.670045570174636, 0.0, 9.942952078568383e+40, 0.0),
    (0.9, 0.5, -12.30978303947484, -104.74435447783104, -0.0002708593609888005, 0.0025353196369007295),
    (0.1, -0.5, -0.04021857935647699, 0.0, -0.27165490650392987, 0.0),
    (1.0, -0.5, -182.4268956073255, 0.0, 0.0023519287647732054, 0.0),
    (2.0, 0.5, 132.08030986113346, -136.7476297635928, 463661.329495109, 387021.6142772245),
    (0.9, 2.5, -128.37760615436397, -100.59196535654738, 0.0053945709609806835, -0.004204244402434657),
    (0.75, -0.5, -35.85247898499245, 0.0, 0.007088930398933577, 0.0),
    (2.0, 2.5, -148.19608347837845, 0.0, -0.017963470580277283, 0.0),
    (1.0, 0.5, -143.28504612535878, 0.0, -0.001989745438709758, 0.0),
    (1.5, -0.5, -30.342779752747, 102.41119480320813, -43950.534654263836, -99121.90866574699),
    (1.75, -0.5, -148.42135323851195, 0.0, 1.173714488352649, 0.0),
    (0.9, 1.3, 62.627362176737755, -151.56728660094473, -3.4776653366552185e+31, -3.249197507495135e+31),
    (1.25, -0.5, -180.54203933014935, 3.8348503903107787, 0.0020027810594472903, 4.247764600837754e-05),
    (1.25, 0.5, -191.80572445191052, 0.0, -0.0010782192405511442, 0.0),
    (0.25, 1.3, 1.8710392976542236, -2.1296240642811313, -0.1973710136387791, -0.3921355679364969),
    (0.1, 2.0, -0.1571113828828502, 0.42407945516331186, 0.7733588850310437, 0.2731464549902844),
    (1.0, 2.5, -123.88266983446421, 0.0, 0.009071537891068354, 0.0),
    (0.25, -0.5, -0.047550950783187294, 2.128108265734853, -0.021231657901583843, -0.11226099898783076),
    (0.9, 0.5, -144.2106031520441, -40.42493707316045, -0.0017384078279136662, 0.0004911369263956496),
    (2.0, 2.5, -84.96199763791941, 58.35045606001319, 0.024738316561880327, 0.315264965734674),
    (0.5, 2.5, -2.5540324793299947, -14.406866242153132, 0.016710019361797192, -0.06521644494249917),
    (1.5, 0.5, -129.59959082885385, -34.76651606083047, 0.0004440394169943884, -0.000222957724687708),
    (1.0, -0.5, -51.976427226261116, 9.681044935944628, 0.008244199648613606, 0.0016165307234445097),
    (1.75, 2.5, -20.319190651533138, 0.0, 0.016988878091942283, 0.0),
    (1.75, 2.5, 99.4480784441243, 135.1347475237621, -51197.31827335675, 43515.125214408596),
    (1.25, 2.5, 99.2358924693847, 0.0, 490786298043119.3, 0.0),
    (1.5, 1.3, -6.182651480455677, 72.3640027432365, -628.7345691176901, 338.54326865376316),
    (0.5, 1.3, -8.326044588845324, -3.735511183690089, 0.08313479640637822, -0.035350901783875434),
    (1.5, 2.0, 124.86054386772751, 0.0, 1886153935.929668, 0.0),
    (1.0, 2.5, -117.88599840748515, -41.82786490354555, 0.008473421617106524, -0.002993615472592295),
    (0.5, -0.5, -15.543300887799008, 0.37863368689364363, -0.0017305814493260878, -8.350609939181986e-05),
    (0.75, 0.5, 71.06698958309224, -3.633438155831887, 4.1912030703070545e+128, -1.2753707235368978e+129),
    (0.5, 2.5, -14.664799622424123, 0.0, 0.06324850993737394, 0.0),
    (0.9, 0.5, 58.24584454473703, 50.40323678177516, 3.4444984371530045e+38, 1.3583680117583795e+39),
    (0.9, 2.0, 164.04586329378472, -20.611151245048543, -8.605137693858773e+122, -5.984429843438206e+122),
    (0.75, 1.0, -11.381626435920635, -34.252880016484305, 0.0022316649085332395, -0.007378156181362614),
    (0.9, 2.5, 55.56595126156965, -54.29513832845403, 4.0412972144480634e+32, 2.378071251435361e+31),
    (1.75, -0.5, 92.74734371909919, -112.42942900048465, -137629496.75516108, -51160812.62229282),
    (2.0, 2.5, -145.070750996936, -111.95884963747872, -0.03438153466904367, 0.7900382691165094),
    (1.25, 2.5, 15.804591678760291, -169.99558939515052, -4149216.622224306, 18023566.50939225),
    (1.0, 1.0, -165.74849115508874, 0.0, 1.0383527263739373e-72, 0.0),
    (0.1, 1.0, 0.03532428939190086, -1.5388712526240893, 0.2655375107796128, -0.4573748916926059),
    (2.0, 2.5, 19.695694854173567, 184.11138979513035, -35.433194549526355, 245.01116778533685),
    (0.9, 2.0, 122.13091018040487, 0.0, 1.5553145290136754e+88, 0.0),
    (1.5, 0.5, -141.91029601007398, 0.0, 5.975272440864111e-05, 0.0),
    (0.9, -0.5, 105.28307858197192, 22.918294075209367, 5.3558321622478676e+79, -6.35722680746398e+79),
    (0.5, 0.5, 8.574170791918299, 0.0, 1.452081680294196e+33, 0.0),
    (0.75, 2.5, -15.69481720346402, -10.78263726008431, 0.04609663599072047, -0.029822379351925343),
    (0.9, 1.3, -146.53370010445641, 0.0, 0.003089849322233767, 0.0),
    (1.0, 2.0, 138.13448844317634, -50.95627765562383, 6.278230275077541e+57, -2.202442766007571e+57),
    (0.75, 0.5, -64.59182417149654, -18.32739597652592, -0.002922312159376434, 0.0008284877821682205),
    (0.75, 0.5, -9.867827178231108, 0.0, -0.020169381536638796, 0.0),
    (0.75, 0.5, 38.572086336933786, 4.444460571561811, 1.2707822915498542e+57, 3.9442421382322794e+57),
    (1.25, 2.0, 58.95622764005973, 0.0, 6547812747.560486, 0.0),
    (1.5, 2.5, 91.7751567503958, -91.59214491599182, 18998821.488793824, 11825353.8651046),
    (0.25, 2.5, -1.399061135923654, -2.762612370826232, 0.1597967081490241, -0.17309769150869897),
    (0.1, -0.5, 0.0017912428694545949, 0.8235887675683305, -0.17113799823629774, -0.14444214598126862),
    (0.1, 1.0, 0.5541952164303171, 1.1631743184933547, 0.23750779297927688, 0.7378466845295242),
    (0.9, 1.0, -124.36127253136875, 0.0, 0.0008567077127681372, 0.0),
    (0.1, 0.5, -0.06011321796014577, -0.6870179065849813, 0.33015862393637063, -0.25974695127729497),
    (1.0, 0.5, -182.90466908646837, 0.0, -0.001555129742011844, 0.0),
    (1.75, 1.3, 118.27144073006531, 0.0, 1105175.2515228123, 0.0),
    (0.75, 2.0, -16.132722661625063, 64.16651147672822, 0.004179867226167113, 0.0161110813582407),
    (2.0, 0.5, -51.657943249410195, 0.0, -0.31045913449069373, 0.0),
    (1.0, 0.5, -155.92643588108308, 0.0, -0.0018268424813529098, 0.0),
    (0.1, 2.5, -0.2574750667580082, -0.07777653268197554, 0.6047765947581528, -0.035342091578914686),
    (0.75, 2.0, -60.876261185481674, -26.775496393079955, 0.015098926822715119, -0.006584368392052106),
    (1.25, -0.5, -75.05805082627928, 0.0, 0.004801135386255526, 0.0),
    (0.25, 2.5, -3.019304640598797, 0.0, 0.21194494528407481, 0.0),
    (0.75, 1.0, -32.406098092200246, 0.0, 0.00878731144297821, 0.0),
    (0.9, -0.5, 90.64375645744325, -98.9591490238674, -2.1139160868444904e+64, 5.094717162529787e+63),
    (1.75, 1.3, -178.69625515534747, 0.0, 0.0039656542482496915, 0.0),
    (1.25, 2.0, 95.41918186699706, -137.07851297474303, -6.689849582268209e+16, 1.1483127262498882e+16),
    (0.75, 2.5, -54.66898296107585, -35.124301220090906, 0.013988949390908244, -0.008836710537405548),
    (0.1, 2.0, 0.5774455080991411, 0.0, 2.2126632946658225, 0.0),
    (1.5, -0.5, -121.64286039132428, 0.0, 0.0003163916739327371, 0.0),
    (1.0, 2.0, -78.01588055713428, 0.0, 0.012817903135345097, 0.0),
    (0.75, 1.3, -18.989040772961737, 7.696777446061045, 0.028278755323448108, 0.01162120438046928),
    (1.75, -0.5, 88.94592636695654, -113.75477292540185, -117245073.39818974, -18206287.071521547),
    (0.25, 1.3, -3.831095630548986, 0.0, 0.21915525204726574, 0.0),
    (1.75, 2.0, -57.763762700163404, 6.410432409790188, -0.0005467275286558911, 0.007115799208816625),
    (0.5, 2.0, 12.029743004448946, 0.0, 9.757088244076416e+60, 0.0),
    (2.0, 1.0, -85.65544403777055, 93.54450727810512, -29.68094656125755, -36.0999628064924),
    (1.0, 0.5, -116.6916678533178, 0.0, -0.0024491985086642957, 0.0),
    (1.0, 1.3, 48.35733108228488, 138.57451963419518, 2.2448305529446597e+20, -5.853803707453448e+18),
    (2.0, 0.5, -157.429752442591, 25.17079948545635, 3.9153949781850574, 2.8598788845047127),
    (1.0, 0.5, -72.83543543372832, 0.0, -0.003955684284252769, 0.0),
    (0.25, 0.5, -3.2531116441372814, -2.4150752945428438, 0.05501037531333879, -0.038272795161852925),
    (0.9, 2.5, -72.56919511374545, 0.0, 0.015275437739646824, 0.0),
    (0.9, 0.5, -155.72367198472156, 0.0, -0.001737373902780769, 0.0),
    (1.25, 2.5, 69.83862092615435, 0.0, 46108936537.17102, 0.0),
    (0.9, 2.0, -137.13477219844108, 0.0, 0.00765331779777582, 0.0),
    (2.0, 2.0, -163.38338011297233, 0.0, 0.016750672763691472, 0.0),
    (2.0, 0.5, 96.14095973870944, 118.5292124159432, 89940.67821526458, -83262.9906485718),
    (0.25, 1.3, 1.2493020995237538, -0.9060885125495478, -0.5878439337182038, -0.9706829202144935),
    (1.25, 1.3, 83.25629859695096, 79.74157465575519, 1813507719165422.2, 516846616135427.56),
    (0.5, 2.5, -7.920491091173012, -0.5299257358618473, 0.10976829431187471, -0.006384988884819072),
    (0.25, -0.5, -0.31717744054945135, -1.5503078706203992, -0.07035594130067675, 0.12518444446947863),
    (0.75, 2.0, -19.745732350114398, 28.223604987285018, 0.01852884155946666, 0.025796362178830443),
    (1.5, 2.0, -2.9375707083126397, 10.720333778207898, -0.6721410728508657, -0.1768965637231634),
    (1.5, 0.5, -80.2571729521063, -181.7014401936983, -9996.105175932407, -12063.374164219817),
    (2.0, 1.0, 145.94826602951665, 0.0, 88234.89833428935, 0.0),
    (0.25, 1.3, 2.7036876523965994, 2.8275949728605587, -0.16968162202824535, 0.2525266716137934),
    (0.25, 0.5, 1.4644975584738398, -1.0573173209623763, -0.1649840394960585, -0.032548359050952436),
    (1.25, 1.3, -46.44225983574258, -49.021805905197816, 0.0004917309420694443, -0.0005604003920845228),
    (0.75, 1.3, 9.676862378399408, 51.97693422929181, -0.002199650566511691, 0.011483914233166468),
    (1.25, 1.3, -12.38369055389982, 199.07430843316595, -14718379.844852889, -6128940.430473257),
    (1.5, 1.0, -20.655490525905574, -167.34402417695213, -239928.1998678053, -195243.20529411788),
    (1.25, 2.5, -61.580963025865564, -1.0430443227310193, 0.017911673927730434, -0.00030342483299186006),
    (0.75, 2.5, 30.907925014154912, -3.993380472477197, -9.316428148103115e+38, 8.767909528847529e+38),
    (1.0, 0.5, -189.91155327249936, 0.0, -0.001497290568930218, 0.0),
    (1.0, 0.5, 72.24341503697737, -106.08725026088008, 2.6087883689924533e+32, 6.395905160216071e+31),
    (0.75, -0.5, -53.6603597771562, 0.0, 0.004745488950888021, 0.0),
    (0.75, 0.5, -60.37593013004009, 0.0, -0.003377305796905795, 0.0),
    (1.75, 0.5, 141.4224203536137, 0.0, 53403290.79216046, 0.0),
    (1.75, 2.5, -57.418907221177726, -167.26358779427653, -50.24530969414791, -15.80154735375061),
    (1.5, 2.5, -183.27074612917858, 0.0, 0.005464804236894866, 0.0),
    (0.5, 1.3, -9.854284364460389, -3.791340079730702, 0.07363550698934446, -0.02709145227964422),
    (1.5, 0.5, 122.7998252421352, 0.0, 177782975587.80023, 0.0),
    (1.0, 1.3, -155.16953982404797, 0.0, 0.002164068656076311, 0.0),
    (1.25, 1.3, -199.9930571582468, 0.0, 0.0002515329942887642, 0.0),
    (0.1, -0.5, 0.51420282161788, 1.1405123427381259, -0.08103896256885129, -0.2233346435657973),
    (0.25, 2.0, -2.504838314940386, 0.0, 0.30574556024211924, 0.0),
    (1.25, 2.5, -39.083379499688924, -26.369652049002525, 0.01939701187928371, -0.013090142121407498),
    (1.75, 2.0, -40.7074299064386, -161.59972933539143, -291.5914213087352, -253.56419862866983),
    (1.75, -0.5, 46.59937189270305, -168.74212595377406, 4265901.809693494, -62372212.92079609),
    (1.75, 1.0, -181.85600967690178, 0.0, 0.013279325664885043, 0.0),
    (0.25, 1.0, -1.3124405942229294, 0.0, 0.39555720604269984, 0.0),
    (0.25, -0.5, 2.0610662913898983, 0.7317185052222274, 36596.722661963846, -30193.526201813642),
    (1.25, 1.0, -40.46789247326172, -12.143213515965328, -0.004832755824458064, 0.0015270872350038637),
    (0.1, 2.0, 1.2641246201544862, 1.0692670243286382, -0.20468928948000667, 0.9341441879743176),
    (2.0, 2.5, -33.95462469367787, -8.598681157151795, -0.062187100076843964, 0.031460951364986715),
    (0.5, -0.5, -8.850896676356067, 9.52003560467246, 0.00014538084608238514, -0.0025022390326625513),
    (0.1, 1.0, -1.0345227456359203, -1.2298682297842618, 0.34324609299535286, -0.2147645961908447),
    (0.9, 0.5, 38.655897395186095, -84.23050094333983, -8.080809677026259e+20, -7.298821946483617e+20),
    (0.1, 1.3, -1.189849921777704, 0.0, 0.5040251688764116, 0.0),
    (2.0, 2.5, -188.46396721376374, 0.0, 0.010209542698674306, 0.0),
    (2.0, 2.5, 194.95908742053587, -30.315640536807567, 6518.774008724485, -9444.091795319086),
    (1.5, 0.5, 185.16902026699546, 0.0, 488398699104100.4, 0.0),
    (0.25, -0.5, -1.0369727218559048, -0.9904404078154357, -0.10686518748791259, 0.0629682583399097),
    (2.0, 0.5, 4.166577319963105, 114.42351035258224, 155.60511616406205, 3618.668687883437),
    (0.5, 2.5, 3.825009489886318, -13.763008325804526, -0.013765546957780091, -0.07005441291647954),
    (0.9, -0.5, -134.38834632691817, 0.0, 0.002837049104236983, 0.0),
    (2.0, -0.5, 39.514923123862694, -95.40599034160223, 73384.85291009357, -18443.415981309605),
    (1.5, 2.0, 18.742788667157708, -20.58098404715061, -74.29308404459194, 162.28071771436962),
    (0.5, 0.5, -12.5641718117055, -11.318416112123693, 0.00010768018710268449, -0.0009799991672442745),
    (1.25, 1.3, -23.17750807621049, 100.0174072866443, -31.462873817997163, 45.699782470433554),
    (2.0, 1.0, -78.50313778793357, -31.44629769780571, -2.7134567974286403, -1.0641041930329023),
    (2.0, 1.0, -181.35897740235006, 0.0, 0.6211491749537963, 0.0),
    (0.9, 2.0, -71.50097067092612, 60.58461950596925, 0.008553326575014316, 0.007226066055071676),
    (2.0, 0.5, -172.19588956593046, 0.0, 0.8261642842724876, 0.0),
    (1.25, 0.5, 137.68661709749023, 0.0, 1.2277444824789481e+23, 0.0),
    (0.5, 2.0, -4.471562796136547, 0.6975759356563906, 0.20518663660311226, 0.026189775349767047),
    (1.5, 1.0, 124.96147420247306, 32.06888354845378, -25197684583.532764, -51316171652.614494),
    (0.75, 1.0, 22.310643571369294, 45.659144241866386, 4444072.291241718, -5616518.040876543),
    (0.9, 2.0, 138.80693101488367, 0.0, 9.014373599444472e+101, 0.0),
    (1.0, -0.5, 63.281036684392106, 34.5772429266377, -1.3358197046750954e+30, -1.2949009624407204e+30),
    (1.75, 1.0, -119.04990041893156, 0.0, -0.029338001836811865, 0.0),
    (0.5, 2.5, 6.4244004630131935, 3.420481342037491, 2524764246.3347707, -36089658257.39381),
    (0.5, 0.5, -1.9633023554005473, 0.03526974545861824, 0.054933693082433, 0.0015354805071938686),
    (1.5, -0.5, 44.65833046280102, 31.265953656557862, 19668901.429011658, 425964.11981812934),
    (0.1, -0.5, -0.16412336107584632, 0.009907335716637563, -0.2435275018538938, -0.00203107606180965),
    (2.0, 0.5, -14.26781267005976, 76.91780261420398, 245.09613468998722, 347.1326909857346),
    (2.0, 2.0, -194.8570691092185, 0.0, 0.07050527657197059, 0.0),
    (0.5, 1.3, -2.8948233591483454, -0.9606927199801347, 0.23591917857033295, -0.06510972519111544),
    (1.5, 1.3, -192.54879452720948, 0.0, -0.0009027158231164417, 0.0),
    (1.25, -0.5, -132.41588364202195, -83.98405227844438, 0.0019499684484095396, -0.0012343705064769546),
    (0.25, 2.5, -1.0613028330735483, -2.3572571194237084, 0.18774465354045994, -0.19973722012687145),
    (0.75, 2.5, -25.11348008606618, 0.0, 0.04175852048361488, 0.0),
    (1.75, -0.5, -168.95178356903637, -51.44536324028074, -15.59055380888582, -5.656151014614081),
    (1.5, -0.5, -40.19997532832956, 0.0, 0.11009859126817748, 0.0),
    (0.9, 2.0, -117.42474793528895, 0.0, 0.008935635501059695, 0.0),
    (0.9, 1.3, -39.369153842212214, 0.0, 0.011639674900664303, 0.0),
    (0.5, 2.5, 15.666754243959463, -3.2035673798591158, 4.89914024728206e+98, 4.6290859916027694e+98),
    (0.5, 0.5, 2.1297256992974027, 1.9663046510659306, -10.795734716328028, 3.356635994077743),
    (1.5, -0.5, 189.51253923144807, 0.0, 2.6936414809007884e+16, 0.0),
    (1.0, 1.0, 172.7797276905254, -24.54776893998657, 9.084612113421142e+74, 6.016723674863259e+74),
    (0.75, 2.5, 2.185345369892282, 9.421293791720615, -0.01558901579650742, 0.11393209513156406),
    (0.5, 1.0, -9.409688711179891, 0.0, 0.059625362450455355, 0.0),
    (0.9, 1.0, -145.59382951812054, 0.0, 0.0007303175577397363, 0.0),
    (1.5, -0.5, 53.6403920155798, 4.546502307241433, 34434718.77521828, 42324178.23248592),
    (0.75, 2.0, -42.96292867248758, 0.0, 0.025371180744635412, 0.0),
    (1.0, 1.3, 198.7412321920029, 0.0, 4.195020372012414e+85, 0.0),
    (0.9, 1.3, -146.93592999472938, -55.50425368042283, 0.0026936620875281543, -0.0010219052246772048),
    (0.1, 1.3, 1.522412328092082, 0.0, 3.1608283801321676e+29, 0.0),
    (1.75, 1.0, 56.547867588844085, -24.36529785621482, -12186.341804423073, -10583.158331666218),
    (2.0, 0.5, -21.258785710531736, -45.27327684940864, 57.93608440230723, -11.061697347798576),
    (0.75, 2.0, -10.425616292047984, -6.381742380621473, 0.07526837748458123, -0.043646866692112596),
    (0.9, 0.5, 42.69375458641295, 36.43294299640526, 9.155237352539419e+27, -3.672329572975559e+27),
    (2.0, 1.0, -59.856805062312375, -26.213571162993958, -0.15770114609561525, -2.5209516808849015),
    (0.1, 2.0, 0.7792179090181771, -1.3134471174228186, 0.14921823596067138, -0.765995306062282),
    (1.5, -0.5, -9.121541682782327, 5.771386763764181, 1.6387813708336922, 3.083466964293125),
    (0.9, 0.5, -25.64106471918557, 45.53507108364295, -0.002461698275740239, -0.004572554386106813),
    (1.0, 2.0, -138.9804328346804, -4.052898102996326, 0.007189143828564001, -0.0002096472632202375),
    (1.75, -0.5, 10.049072059920562, 44.4188492286392, 4371.4357427386285, 7558.025927787866),
    (1.0, 2.5, 160.71792438637283, 83.56543123340583, 1.0195124267583368e+66, 2.3716322003172976e+66),
    (0.25, 2.5, 2.5343224730283995, 0.21250389799337038, 1677024056245316.5, 1329950983426972.0),
    (0.1, 0.5, -1.7284015369590162, 0.0, 0.1808319261833121, 0.0),
    (0.9, 2.0, -147.23862284460333, 0.0, 0.007128881363967137, 0.0),
    (0.75, 1.0, 3.4701713989504643, 2.5012332953416867, 58.68272668349333, -129.91943919095084),
    (1.5, -0.5, -96.04722669010654, 0.0, -0.0031594889974597144, 0.0),
    (1.5, 1.3, -137.5648647205639, 0.0, -0.0012699186785924636, 0.0),
    (0.5, 2.0, -11.997459900462509, 0.0, 0.08742970307247644, 0.0),
    (1.25, 0.5, -191.38796103530296, -22.35870150608909, -0.0010660416347930907, 0.00012447439563338826),
    (2.0, 2.0, 101.05213338689236, -77.74174688016117, -1917.4544323422235, 322.73331457138545),
    (1.0, 1.3, 37.56552905325448, -63.44459885433664, 5421355158740055.0, -1688219096255711.5),
    (1.0, 1.3, -168.1551004900562, -58.81881404771606, 0.0017769791572103907, -0.0006241943326679377),
    (1.0, 0.5, -181.49595806606405, 0.0, -0.0015673018706311534, 0.0),
    (0.5, -0.5, -2.3966435121311473, -7.501829469659437, 0.0056436102770764714, 0.004230939084504474),
    (1.25, 1.3, -154.57275232643983, 64.6707180686979, 0.00027754412250059003, 0.00011288046737561263),
    (0.1, -0.5, 1.159202100898298, 1.1013224394861372, 0.07261224995540534, -0.24714516001587775),
    (1.75, -0.5, 0.523523799751627, -143.32349432926438, -873693.3531235178, -1497433.4665477718),
    (0.1, 1.0, 0.38457844168947897, 0.0, 1.6686575306080589, 0.0),
    (1.75, 1.0, 29.91005069518053, 19.046960535144528, -639.0656830375898, 533.1110424841805),
    (1.75, 0.5, -158.4066226948222, 92.89344925022472, 0.8366290668727764, 11.856623711093146),
    (0.25, 2.5, -1.456882954281796, 2.3037688228109183, 0.19084224138740805, 0.16834904284190844),
    (1.25, 0.5, 87.99364276701641, -97.54526149701465, 3.8741175576808403e+17, 1.4124369789226536e+17),
    (1.5, 1.3, -170.60466752176552, -33.61538206359486, -0.000982746514923887, 0.00019566595649253305),
    (1.75, 1.3, 155.74301967723775, -118.54301733743955, 21845303.287392493, -35082442.663941644),
    (0.75, 1.0, -47.83549101085799, 0.0, 0.005891527058926515, 0.0),
    (0.9, -0.5, -141.51154597705568, 0.0, 0.0026923559693548195, 0.0),
    (1.5, 2.5, 21.7637011232893, -18.49655490770478, -90.02021080786879, 36.1810174257461),
    (0.25, 2.0, -1.41800851682783, 0.3706963597243485, 0.42957110997040043, 0.0636760237630869),
    (1.0, 2.5, 43.571486142830274, 85.9724917749282, -7751865250899253.0, 4265982207117966.5),
    (1.75, -0.5, 6.831038662648105, 161.658182770147, -5256865.463378871, 2071341.5839168362),
    (0.5, 1.3, -15.716370981508085, -0.42711740583606655, 0.053221664625892506, -0.0014075620234640371),
    (1.5, 1.3, 175.18502266484745, 85.08494990539869, -17880845715790.57, -8848708472667.924),
    (2.0, 2.0, -25.603834283007206, 34.467286870818846, 0.05022762325466978, -1.4454858602285012),
    (1.0, 1.0, 95.182370484732, 15.763773987764996, -2.170208931171753e+41, -1.21246836771063e+40),
    (0.1, 2.5, 1.5781507482722994, -0.004464018626515863, -3.7926567765196325e+39, -1.9442345643936287e+39),
    (0.9, 0.5, -94.79875935118079, 0.0, -0.002867364302185168, 0.0),
    (1.0, 1.0, -195.6324683595865, 0.0, 1.0911853090553937e-85, 0.0),
    (1.25, -0.5, 0.6320161604118559, -15.350972531088953, -312.1816536187722, 306.6453202156839),
    (1.75, 1.0, -129.6688855143529, 1.362976940010379, -0.03330914015780411, -0.0007210817978691142),
    (1.25, 1.3, -113.0807103608618, -29.574286445932813, 0.00041150450624950665, -0.00010334666610720308),
    (0.1, 2.5, -0.03508955852042127, -0.2679013413157421, 0.6885275538774164, -0.16622512568911274),
    (1.75, 2.0, -20.456537833388882, -50.02038861955696, 0.7339613210100414, -4.095249390007909),
    (2.0, 2.0, 92.92867741763247, 17.81109138733723, 559.9772419616912, 606.1315404515453),
    (1.0, 1.0, -90.55530193748106, 174.91961119529336, 2.5027764560429324e-40, -3.981199313025943e-40),
    (0.9, 2.5, -73.72529918913288, 31.688867864538224, 0.012730697447966751, 0.0054202674721509705),
    (0.5, 2.0, 7.261164275343982, 0.5304497036283439, 6.577467882840216e+20, 2.1532589334709993e+21),
    (0.5, -0.5, 9.994800322441272, 7.566118481367277, -9.598983325271884e+21, 8.95035185276168e+21),
    (0.1, 2.5, -0.222552147908257, 0.923533770577334, 0.4132095084949605, 0.2950566868995188),
    (0.1, 1.0, 0.9274674319823446, 0.0, 11.320483641929789, 0.0),
    (0.5, 1.3, 13.151864123903763, 5.89125925680566, -3.227457461023857e+59, -3.1380802718082266e+59),
    (1.75, 0.5, -135.6800318467477, 0.0, -0.027580867651310865, 0.0),
];
