"""Ziggurat sampling tables. Generated by tools/gen_zigtables.py; do not edit."""

NOR_R = float.fromhex("0x1.d3bb48209ad33p+1")

NOR_INV_R = float.fromhex("0x1.183aa6c20e8c1p-2")

EXP_R = float.fromhex("0x1.ec9d9297ebb83p+2")

KI = (
    4208095142473578,
    0,
    3387314423973544,
    3838760076542274,
    4030768804392682,
    4136731738896254,
    4203757248105145,
    4249917568205994,
    4283617341590296,
    4309289223136604,
    4329489775174550,
    4345795907393188,
    4359232558744730,
    4370494503737299,
    4380069246215646,
    4388308869042394,
    4395473957549321,
    4401761481783924,
    4407323076021240,
    4412277362218204,
    4416718463613199,
    4420722014516422,
    4424349484777079,
    4427651345409294,
    4430669422005229,
    4433438668975191,
    4435988524278344,
    4438343955930065,
    4440526279077425,
    4442553800234660,
    4444442329865861,
    4446205593658138,
    4447855565093316,
    4449402736340121,
    4450856340408624,
    4452224534496486,
    4453514552210512,
    4454732830656798,
    4455885117109368,
    4456976558985043,
    4458011780094444,
    4458994945550386,
    4459929817254120,
    4460819801517196,
    4461667990089170,
    4462477195632268,
    4463249982500384,
    4463988693531856,
    4464695473445501,
    4465372289331869,
    4466020948651920,
    4466643115089764,
    4467240322552142,
    4467813987562542,
    4468365420260672,
    4468895834186994,
    4469406355006040,
    4469898028300364,
    4470371826548633,
    4470828655385770,
    4471269359229841,
    4471694726349190,
    4472105493433674,
    4472502349725738,
    4472885940759935,
    4473256871753524,
    4473615710685532,
    4473962991097124,
    4474299214642296,
    4474624853414418,
    4474940352071305,
    4475246129778808,
    4475542581990776,
    4475830082081194,
    4476108982842610,
    4476379617863426,
    4476642302795321,
    4476897336520866,
    4477145002230339,
    4477385568415884,
    4477619289790266,
    4477846408136804,
    4478067153096380,
    4478281742896886,
    4478490385029917,
    4478693276879082,
    4478890606303906,
    4479082552182886,
    4479269284918997,
    4479450966910588,
    4479627752990372,
    4479799790834988,
    4479967221347354,
    4480130179013872,
    4480288792238368,
    4480443183654460,
    4480593470417939,
    4480739764480586,
    4480882172846772,
    4481020797814010,
    4481155737198612,
    4481287084547452,
    4481414929336784,
    4481539357158974,
    4481660449897960,
    4481778285894165,
    4481892940099539,
    4482004484223382,
    4482112986869492,
    4482218513665204,
    4482321127382802,
    4482420888053758,
    4482517853076245,
    4482612077316275,
    4482703613202871,
    4482792510817576,
    4482878817978627,
    4482962580320076,
    4483043841366126,
    4483122642600925,
    4483199023534056,
    4483273021761922,
    4483344673025224,
    4483414011262724,
    4483481068661428,
    4483545875703378,
    4483608461209170,
    4483668852378323,
    4483727074826624,
    4483783152620564,
    4483837108308932,
    4483888962951686,
    4483938736146144,
    4483986446050596,
    4484032109405372,
    4484075741551420,
    4484117356446452,
    4484156966678662,
    4484194583478081,
    4484230216725550,
    4484263874959345,
    4484295565379450,
    4484325293849474,
    4484353064896186,
    4484378881706674,
    4484402746123075,
    4484424658634833,
    4484444618368474,
    4484462623074794,
    4484478669113436,
    4484492751434740,
    4484504863558830,
    4484514997551788,
    4484523143998833,
    4484529291974394,
    4484533429008906,
    4484535541052219,
    4484535612433424,
    4484533625816926,
    4484529562154580,
    4484523400633636,
    4484515118620291,
    4484504691598554,
    4484492093104164,
    4484477294653230,
    4484460265665252,
    4484440973380154,
    4484419382768918,
    4484395456437370,
    4484369154522621,
    4484340434581640,
    4484309251471359,
    4484275557219678,
    4484239300886654,
    4484200428415112,
    4484158882469814,
    4484114602264271,
    4484067523374160,
    4484017577536216,
    4483964692431365,
    4483908791450714,
    4483849793442887,
    4483787612441036,
    4483722157367660,
    4483653331715198,
    4483581033200083,
    4483505153387764,
    4483425577285833,
    4483342182902157,
    4483254840764470,
    4483163413397547,
    4483067754753536,
    4482967709590562,
    4482863112794072,
    4482753788634692,
    4482639549955636,
    4482520197281720,
    4482395517841076,
    4482265284489409,
    4482129254525304,
    4481987168383486,
    4481838748191074,
    4481683696169781,
    4481521692864464,
    4481352395175570,
    4481175434169564,
    4480990412637506,
    4480796902367134,
    4480594441088331,
    4480382529045225,
    4480160625140311,
    4479928142586662,
    4479684443993061,
    4479428835793398,
    4479160561915451,
    4478878796564388,
    4478582635972392,
    4478271088936406,
    4477943065929958,
    4477597366530538,
    4477232664848704,
    4476847492576192,
    4476440219183781,
    4476009028690434,
    4475551892286424,
    4475066535915646,
    4474550401693506,
    4474000601739904,
    4473413862618200,
    4472786458058295,
    4472114126959004,
    4471391972746494,
    4470614338917719,
    4469774653883156,
    4468865235838896,
    4467877045039530,
    4466799366045354,
    4465619395558397,
    4464321701199635,
    4462887501169282,
    4461293691124341,
    4459511507635972,
    4457504658253067,
    4455226650325010,
    4452616884242348,
    4449594783440798,
    4446050695647666,
    4441831266659618,
    4436714892174061,
    4430368316897338,
    4422264825074740,
    4411517007702132,
    4396496531309976,
    4373832704204284,
    4335125104963628,
    4251099761679434,
)

WI = (
    float.fromhex("0x1.f493b7815d979p-51"),
    float.fromhex("0x1.b8d0be3fdf6c6p-55"),
    float.fromhex("0x1.250af3c2c5bb4p-54"),
    float.fromhex("0x1.57cb938443b61p-54"),
    float.fromhex("0x1.801fce82fa70cp-54"),
    float.fromhex("0x1.a230c2e4cd0bcp-54"),
    float.fromhex("0x1.c004d2f3861f7p-54"),
    float.fromhex("0x1.dac2f5a747274p-54"),
    float.fromhex("0x1.f32482d4cd5c3p-54"),
    float.fromhex("0x1.04d32278ebbadp-53"),
    float.fromhex("0x1.0f5053b025d43p-53"),
    float.fromhex("0x1.192a697413677p-53"),
    float.fromhex("0x1.227a28f7a1af5p-53"),
    float.fromhex("0x1.2b52e3863d880p-53"),
    float.fromhex("0x1.33c3fc05791f5p-53"),
    float.fromhex("0x1.3bd9ec1a2b12fp-53"),
    float.fromhex("0x1.439ef8dff9b55p-53"),
    float.fromhex("0x1.4b1bb363dfea7p-53"),
    float.fromhex("0x1.52575621ad374p-53"),
    float.fromhex("0x1.59580a707ce96p-53"),
    float.fromhex("0x1.60231cfd97eeap-53"),
    float.fromhex("0x1.66bd261a37c3dp-53"),
    float.fromhex("0x1.6d2a292000570p-53"),
    float.fromhex("0x1.736dad346f8a6p-53"),
    float.fromhex("0x1.798ad10b32a77p-53"),
    float.fromhex("0x1.7f845ad46f543p-53"),
    float.fromhex("0x1.855cc53430a77p-53"),
    float.fromhex("0x1.8b1649e7b769ap-53"),
    float.fromhex("0x1.90b2ea94ecf98p-53"),
    float.fromhex("0x1.96347822c1eeap-53"),
    float.fromhex("0x1.9b9c98e38c546p-53"),
    float.fromhex("0x1.a0eccdca4a72cp-53"),
    float.fromhex("0x1.a62676d77cd59p-53"),
    float.fromhex("0x1.ab4ad6e101630p-53"),
    float.fromhex("0x1.b05b16d136c9cp-53"),
    float.fromhex("0x1.b558487427a29p-53"),
    float.fromhex("0x1.ba4368e529f3ap-53"),
    float.fromhex("0x1.bf1d62abf8232p-53"),
    float.fromhex("0x1.c3e70f9594ef3p-53"),
    float.fromhex("0x1.c8a13a5323b61p-53"),
    float.fromhex("0x1.cd4c9fe72268bp-53"),
    float.fromhex("0x1.d1e9f0e80b748p-53"),
    float.fromhex("0x1.d679d29e41f10p-53"),
    float.fromhex("0x1.dafce0023b8c3p-53"),
    float.fromhex("0x1.df73aa9f17653p-53"),
    float.fromhex("0x1.e3debb5d2edfep-53"),
    float.fromhex("0x1.e83e9337a6f00p-53"),
    float.fromhex("0x1.ec93abdf982cep-53"),
    float.fromhex("0x1.f0de784f06226p-53"),
    float.fromhex("0x1.f51f654d8f688p-53"),
    float.fromhex("0x1.f956d9e87d7aep-53"),
    float.fromhex("0x1.fd8537dfa2eacp-53"),
    float.fromhex("0x1.00d56e04234ecp-52"),
    float.fromhex("0x1.02e40f5398f9ap-52"),
    float.fromhex("0x1.04eea9e16a5fcp-52"),
    float.fromhex("0x1.06f565b72a010p-52"),
    float.fromhex("0x1.08f869071f40bp-52"),
    float.fromhex("0x1.0af7d84bc6113p-52"),
    float.fromhex("0x1.0cf3d664bcc7fp-52"),
    float.fromhex("0x1.0eec84b16086bp-52"),
    float.fromhex("0x1.10e20329515eep-52"),
    float.fromhex("0x1.12d4707310fbep-52"),
    float.fromhex("0x1.14c3e9f8e9141p-52"),
    float.fromhex("0x1.16b08bfc4201ep-52"),
    float.fromhex("0x1.189a71a78da34p-52"),
    float.fromhex("0x1.1a81b51ee6d88p-52"),
    float.fromhex("0x1.1c666f8f82acbp-52"),
    float.fromhex("0x1.1e48b93e0d42ep-52"),
    float.fromhex("0x1.2028a9940a09fp-52"),
    float.fromhex("0x1.2206572c4c6e9p-52"),
    float.fromhex("0x1.23e1d7de9c31fp-52"),
    float.fromhex("0x1.25bb40ca96bfbp-52"),
    float.fromhex("0x1.2792a661dd37fp-52"),
    float.fromhex("0x1.29681c719d71bp-52"),
    float.fromhex("0x1.2b3bb62b82edap-52"),
    float.fromhex("0x1.2d0d862e1b853p-52"),
    float.fromhex("0x1.2edd9e8cba98ep-52"),
    float.fromhex("0x1.30ac10d6e48d7p-52"),
    float.fromhex("0x1.3278ee1f4b930p-52"),
    float.fromhex("0x1.3444470265ea1p-52"),
    float.fromhex("0x1.360e2baca52d5p-52"),
    float.fromhex("0x1.37d6abe05586ap-52"),
    float.fromhex("0x1.399dd6fb2b264p-52"),
    float.fromhex("0x1.3b63bbfb83d03p-52"),
    float.fromhex("0x1.3d28698561de0p-52"),
    float.fromhex("0x1.3eebede725a83p-52"),
    float.fromhex("0x1.40ae571e09e74p-52"),
    float.fromhex("0x1.426fb2da6745dp-52"),
    float.fromhex("0x1.44300e83c30a4p-52"),
    float.fromhex("0x1.45ef773cac75dp-52"),
    float.fromhex("0x1.47adf9e66c336p-52"),
    float.fromhex("0x1.496ba32488f2fp-52"),
    float.fromhex("0x1.4b287f602415dp-52"),
    float.fromhex("0x1.4ce49acb311dcp-52"),
    float.fromhex("0x1.4ea001638a605p-52"),
    float.fromhex("0x1.505abef5e5562p-52"),
    float.fromhex("0x1.5214df20a8b5ap-52"),
    float.fromhex("0x1.53ce6d56a664fp-52"),
    float.fromhex("0x1.558774e1bb2c8p-52"),
    float.fromhex("0x1.574000e555f78p-52"),
    float.fromhex("0x1.58f81c60e8514p-52"),
    float.fromhex("0x1.5aafd23241b59p-52"),
    float.fromhex("0x1.5c672d17d733dp-52"),
    float.fromhex("0x1.5e1e37b2f8cd3p-52"),
    float.fromhex("0x1.5fd4fc89f5e38p-52"),
    float.fromhex("0x1.618b860a31fc3p-52"),
    float.fromhex("0x1.6341de8a2b0a2p-52"),
    float.fromhex("0x1.64f8104b7260bp-52"),
    float.fromhex("0x1.66ae257c99672p-52"),
    float.fromhex("0x1.6864283b13137p-52"),
    float.fromhex("0x1.6a1a22950b2b1p-52"),
    float.fromhex("0x1.6bd01e8b343bbp-52"),
    float.fromhex("0x1.6d8626128d352p-52"),
    float.fromhex("0x1.6f3c43161f854p-52"),
    float.fromhex("0x1.70f27f78b68ebp-52"),
    float.fromhex("0x1.72a8e516914c6p-52"),
    float.fromhex("0x1.745f7dc70eedcp-52"),
    float.fromhex("0x1.7616535e5731fp-52"),
    float.fromhex("0x1.77cd6faeff449p-52"),
    float.fromhex("0x1.7984dc8babd93p-52"),
    float.fromhex("0x1.7b3ca3c8b1409p-52"),
    float.fromhex("0x1.7cf4cf3db22fbp-52"),
    float.fromhex("0x1.7ead68c73dee7p-52"),
    float.fromhex("0x1.80667a486ea1fp-52"),
    float.fromhex("0x1.82200dac88676p-52"),
    float.fromhex("0x1.83da2ce899f15p-52"),
    float.fromhex("0x1.8594e1fd1f5bdp-52"),
    float.fromhex("0x1.875036f7a7ec5p-52"),
    float.fromhex("0x1.890c35f47f72dp-52"),
    float.fromhex("0x1.8ac8e9205c043p-52"),
    float.fromhex("0x1.8c865aba10c9cp-52"),
    float.fromhex("0x1.8e44951446a27p-52"),
    float.fromhex("0x1.9003a2973b58fp-52"),
    float.fromhex("0x1.91c38dc288347p-52"),
    float.fromhex("0x1.9384612ef0afcp-52"),
    float.fromhex("0x1.954627903a28ap-52"),
    float.fromhex("0x1.9708ebb70d5eep-52"),
    float.fromhex("0x1.98ccb892e2a31p-52"),
    float.fromhex("0x1.9a919933f99bfp-52"),
    float.fromhex("0x1.9c5798cd5d92cp-52"),
    float.fromhex("0x1.9e1ec2b6f7411p-52"),
    float.fromhex("0x1.9fe7226fad24ap-52"),
    float.fromhex("0x1.a1b0c39f93692p-52"),
    float.fromhex("0x1.a37bb21a2c85bp-52"),
    float.fromhex("0x1.a547f9e0bbb88p-52"),
    float.fromhex("0x1.a715a724aa9a4p-52"),
    float.fromhex("0x1.a8e4c64a0313dp-52"),
    float.fromhex("0x1.aab563e9ff108p-52"),
    float.fromhex("0x1.ac878cd5af5cep-52"),
    float.fromhex("0x1.ae5b4e18bb336p-52"),
    float.fromhex("0x1.b030b4fc3a11ap-52"),
    float.fromhex("0x1.b207cf09a985bp-52"),
    float.fromhex("0x1.b3e0aa0e00c00p-52"),
    float.fromhex("0x1.b5bb541ce3d03p-52"),
    float.fromhex("0x1.b797db93f8927p-52"),
    float.fromhex("0x1.b9764f1e5f73cp-52"),
    float.fromhex("0x1.bb56bdb85256ep-52"),
    float.fromhex("0x1.bd3936b2ec0a2p-52"),
    float.fromhex("0x1.bf1dc9b81ae83p-52"),
    float.fromhex("0x1.c10486cec16a0p-52"),
    float.fromhex("0x1.c2ed7e5f07a2dp-52"),
    float.fromhex("0x1.c4d8c136e0d1cp-52"),
    float.fromhex("0x1.c6c6608ec8705p-52"),
    float.fromhex("0x1.c8b66e0eba617p-52"),
    float.fromhex("0x1.caa8fbd36a2abp-52"),
    float.fromhex("0x1.cc9e1c73bd690p-52"),
    float.fromhex("0x1.ce95e3068e037p-52"),
    float.fromhex("0x1.d0906328b8f6ep-52"),
    float.fromhex("0x1.d28db1037ef20p-52"),
    float.fromhex("0x1.d48de1533c647p-52"),
    float.fromhex("0x1.d691096e7f123p-52"),
    float.fromhex("0x1.d8973f4d7fba5p-52"),
    float.fromhex("0x1.daa0999206e70p-52"),
    float.fromhex("0x1.dcad2f8fc490ep-52"),
    float.fromhex("0x1.debd195522e37p-52"),
    float.fromhex("0x1.e0d06fb49d21cp-52"),
    float.fromhex("0x1.e2e74c4ea46f6p-52"),
    float.fromhex("0x1.e501c99c1d188p-52"),
    float.fromhex("0x1.e72002f97fe25p-52"),
    float.fromhex("0x1.e94214b2abf0ap-52"),
    float.fromhex("0x1.eb681c0f76f08p-52"),
    float.fromhex("0x1.ed9237610a73ap-52"),
    float.fromhex("0x1.efc086101eca9p-52"),
    float.fromhex("0x1.f1f328ac25321p-52"),
    float.fromhex("0x1.f42a40fb74d6dp-52"),
    float.fromhex("0x1.f665f20c90168p-52"),
    float.fromhex("0x1.f8a6604899782p-52"),
    float.fromhex("0x1.faebb187122bfp-52"),
    float.fromhex("0x1.fd360d22fe785p-52"),
    float.fromhex("0x1.ff859c118f60bp-52"),
    float.fromhex("0x1.00ed447d3a075p-51"),
    float.fromhex("0x1.021a8028fc947p-51"),
    float.fromhex("0x1.034a983a902abp-51"),
    float.fromhex("0x1.047da4e3ef5c7p-51"),
    float.fromhex("0x1.05b3bf6adb37ep-51"),
    float.fromhex("0x1.06ed023a72668p-51"),
    float.fromhex("0x1.082988f632e17p-51"),
    float.fromhex("0x1.0969708e8a254p-51"),
    float.fromhex("0x1.0aacd7571c0c4p-51"),
    float.fromhex("0x1.0bf3dd1eed448p-51"),
    float.fromhex("0x1.0d3ea34aa3d30p-51"),
    float.fromhex("0x1.0e8d4cf116593p-51"),
    float.fromhex("0x1.0fdffefa69fb6p-51"),
    float.fromhex("0x1.1136e04207041p-51"),
    float.fromhex("0x1.129219bbb5d35p-51"),
    float.fromhex("0x1.13f1d69c4096dp-51"),
    float.fromhex("0x1.1556448602e3bp-51"),
    float.fromhex("0x1.16bf93b9deef3p-51"),
    float.fromhex("0x1.182df74d21261p-51"),
    float.fromhex("0x1.19a1a564eebacp-51"),
    float.fromhex("0x1.1b1ad777f2f8ep-51"),
    float.fromhex("0x1.1c99ca971a694p-51"),
    float.fromhex("0x1.1e1ebfbe4ae39p-51"),
    float.fromhex("0x1.1fa9fc2e2d901p-51"),
    float.fromhex("0x1.213bc9d04cc81p-51"),
    float.fromhex("0x1.22d477a6fd3eep-51"),
    float.fromhex("0x1.24745a4ac9c24p-51"),
    float.fromhex("0x1.261bcc77658e0p-51"),
    float.fromhex("0x1.27cb2faa8592ep-51"),
    float.fromhex("0x1.2982ecd770e78p-51"),
    float.fromhex("0x1.2b437532a0a52p-51"),
    float.fromhex("0x1.2d0d43196db97p-51"),
    float.fromhex("0x1.2ee0db1a978f5p-51"),
    float.fromhex("0x1.30becd256aeeep-51"),
    float.fromhex("0x1.32a7b5e68a4a3p-51"),
    float.fromhex("0x1.349c405ae12a3p-51"),
    float.fromhex("0x1.369d27a33a840p-51"),
    float.fromhex("0x1.38ab39256410ap-51"),
    float.fromhex("0x1.3ac7570ae88fap-51"),
    float.fromhex("0x1.3cf27b31704a6p-51"),
    float.fromhex("0x1.3f2dbaa60f475p-51"),
    float.fromhex("0x1.417a49cb9e5dap-51"),
    float.fromhex("0x1.43d9815545e94p-51"),
    float.fromhex("0x1.464ce44a73a15p-51"),
    float.fromhex("0x1.48d62759c43bcp-51"),
    float.fromhex("0x1.4b7739d6b5a27p-51"),
    float.fromhex("0x1.4e3250dcd8902p-51"),
    float.fromhex("0x1.5109f53e9ac41p-51"),
    float.fromhex("0x1.54011523a7e42p-51"),
    float.fromhex("0x1.571b1a94ae41bp-51"),
    float.fromhex("0x1.5a5c08b718dd9p-51"),
    float.fromhex("0x1.5dc8a243ad0fep-51"),
    float.fromhex("0x1.61669cf861e4cp-51"),
    float.fromhex("0x1.653ce7b006aeap-51"),
    float.fromhex("0x1.69540be9fe5c3p-51"),
    float.fromhex("0x1.6db6b8d09e232p-51"),
    float.fromhex("0x1.72728f05f7a34p-51"),
    float.fromhex("0x1.7799556090673p-51"),
    float.fromhex("0x1.7d42df4d6ce8cp-51"),
    float.fromhex("0x1.839030529f234p-51"),
    float.fromhex("0x1.8ab0fbfaa7c14p-51"),
    float.fromhex("0x1.92ee0946f4496p-51"),
    float.fromhex("0x1.9cbee014057abp-51"),
    float.fromhex("0x1.a8fdc7894775ap-51"),
    float.fromhex("0x1.b981f3878fdb1p-51"),
    float.fromhex("0x1.d3bb48209ad33p-51"),
)

FI = (
    float.fromhex("0x1.0000000000000p+0"),
    float.fromhex("0x1.f446ac979f087p-1"),
    float.fromhex("0x1.eb7545b6ca915p-1"),
    float.fromhex("0x1.e3f11e027f077p-1"),
    float.fromhex("0x1.dd36fa704de95p-1"),
    float.fromhex("0x1.d70920657bcf2p-1"),
    float.fromhex("0x1.d144978a119dcp-1"),
    float.fromhex("0x1.cbd33a8a72debp-1"),
    float.fromhex("0x1.c6a5ecea9787fp-1"),
    float.fromhex("0x1.c1b1cd9eebaeap-1"),
    float.fromhex("0x1.bceeb4ee1dc82p-1"),
    float.fromhex("0x1.b85653a8ff552p-1"),
    float.fromhex("0x1.b3e3a8234dd10p-1"),
    float.fromhex("0x1.af92a3f6ce8a2p-1"),
    float.fromhex("0x1.ab5fef17a2504p-1"),
    float.fromhex("0x1.a748bd550c9e1p-1"),
    float.fromhex("0x1.a34aafdf5af0fp-1"),
    float.fromhex("0x1.9f63bee651fd8p-1"),
    float.fromhex("0x1.9b9228d240681p-1"),
    float.fromhex("0x1.97d4657617ac1p-1"),
    float.fromhex("0x1.94291c21b7a47p-1"),
    float.fromhex("0x1.908f1bd31714fp-1"),
    float.fromhex("0x1.8d0554fe60aa8p-1"),
    float.fromhex("0x1.898ad48badf02p-1"),
    float.fromhex("0x1.861ebfc37bcacp-1"),
    float.fromhex("0x1.82c050f56cf6ep-1"),
    float.fromhex("0x1.7f6ed4b20e2cbp-1"),
    float.fromhex("0x1.7c29a779c6858p-1"),
    float.fromhex("0x1.78f033ca0b0d5p-1"),
    float.fromhex("0x1.75c1f0770d856p-1"),
    float.fromhex("0x1.729e5f43f6d12p-1"),
    float.fromhex("0x1.6f850baea7aeep-1"),
    float.fromhex("0x1.6c7589e635a89p-1"),
    float.fromhex("0x1.696f75e513b2ap-1"),
    float.fromhex("0x1.667272a92e323p-1"),
    float.fromhex("0x1.637e298550c18p-1"),
    float.fromhex("0x1.6092498802665p-1"),
    float.fromhex("0x1.5dae86f4aff6ap-1"),
    float.fromhex("0x1.5ad29acc85c89p-1"),
    float.fromhex("0x1.57fe4264c8d8fp-1"),
    float.fromhex("0x1.55313f08d9e46p-1"),
    float.fromhex("0x1.526b55a656cd5p-1"),
    float.fromhex("0x1.4fac4e820b667p-1"),
    float.fromhex("0x1.4cf3f4f494ec0p-1"),
    float.fromhex("0x1.4a42172dc5278p-1"),
    float.fromhex("0x1.479685fdf5012p-1"),
    float.fromhex("0x1.44f114a493679p-1"),
    float.fromhex("0x1.425198a355fe3p-1"),
    float.fromhex("0x1.3fb7e99585b82p-1"),
    float.fromhex("0x1.3d23e10af31a3p-1"),
    float.fromhex("0x1.3a955a662cd0ep-1"),
    float.fromhex("0x1.380c32bda00d5p-1"),
    float.fromhex("0x1.358848bf550e9p-1"),
    float.fromhex("0x1.33097c9703a35p-1"),
    float.fromhex("0x1.308fafd6438efp-1"),
    float.fromhex("0x1.2e1ac55ea3beep-1"),
    float.fromhex("0x1.2baaa14d7954ap-1"),
    float.fromhex("0x1.293f28e93cd15p-1"),
    float.fromhex("0x1.26d84290504edp-1"),
    float.fromhex("0x1.2475d5a90db84p-1"),
    float.fromhex("0x1.2217ca92ff7f2p-1"),
    float.fromhex("0x1.1fbe0a9929620p-1"),
    float.fromhex("0x1.1d687fe549969p-1"),
    float.fromhex("0x1.1b171573fd111p-1"),
    float.fromhex("0x1.18c9b709b3c50p-1"),
    float.fromhex("0x1.16805128639dap-1"),
    float.fromhex("0x1.143ad105ea99cp-1"),
    float.fromhex("0x1.11f9248311f38p-1"),
    float.fromhex("0x1.0fbb3a2325913p-1"),
    float.fromhex("0x1.0d810104142a0p-1"),
    float.fromhex("0x1.0b4a68d70d9aep-1"),
    float.fromhex("0x1.091761d995d81p-1"),
    float.fromhex("0x1.06e7dccf03c36p-1"),
    float.fromhex("0x1.04bbcafa63f2ep-1"),
    float.fromhex("0x1.02931e18b822ap-1"),
    float.fromhex("0x1.006dc85b8cac4p-1"),
    float.fromhex("0x1.fc9778c7bbda1p-2"),
    float.fromhex("0x1.f859da7a900cap-2"),
    float.fromhex("0x1.f4229cb2f7af3p-2"),
    float.fromhex("0x1.eff1a717e8f95p-2"),
    float.fromhex("0x1.ebc6e20bd1f54p-2"),
    float.fromhex("0x1.e7a236a4ec3c5p-2"),
    float.fromhex("0x1.e3838ea5f9b85p-2"),
    float.fromhex("0x1.df6ad47763a09p-2"),
    float.fromhex("0x1.db57f320b56b1p-2"),
    float.fromhex("0x1.d74ad6426de33p-2"),
    float.fromhex("0x1.d3436a1021080p-2"),
    float.fromhex("0x1.cf419b4ae5b6dp-2"),
    float.fromhex("0x1.cb45573c0a848p-2"),
    float.fromhex("0x1.c74e8bb00d7c7p-2"),
    float.fromhex("0x1.c35d26f1d2cb8p-2"),
    float.fromhex("0x1.bf7117c616a17p-2"),
    float.fromhex("0x1.bb8a4d6716d91p-2"),
    float.fromhex("0x1.b7a8b7807131bp-2"),
    float.fromhex("0x1.b3cc462b331cap-2"),
    float.fromhex("0x1.aff4e9ea18552p-2"),
    float.fromhex("0x1.ac2293a5f5a9ep-2"),
    float.fromhex("0x1.a85534aa4d880p-2"),
    float.fromhex("0x1.a48cbea20c04dp-2"),
    float.fromhex("0x1.a0c923946843ep-2"),
    float.fromhex("0x1.9d0a55e1e93dfp-2"),
    float.fromhex("0x1.995048418c0c6p-2"),
    float.fromhex("0x1.959aedbe09f93p-2"),
    float.fromhex("0x1.91ea39b33cb17p-2"),
    float.fromhex("0x1.8e3e1fcb9f115p-2"),
    float.fromhex("0x1.8a9693fde9188p-2"),
    float.fromhex("0x1.86f38a8ac5ab6p-2"),
    float.fromhex("0x1.8354f7faa0dd9p-2"),
    float.fromhex("0x1.7fbad11b8d911p-2"),
    float.fromhex("0x1.7c250aff414b0p-2"),
    float.fromhex("0x1.78939af9252ebp-2"),
    float.fromhex("0x1.7506769c7b1edp-2"),
    float.fromhex("0x1.717d93ba9614cp-2"),
    float.fromhex("0x1.6df8e86124caap-2"),
    float.fromhex("0x1.6a786ad88de21p-2"),
    float.fromhex("0x1.66fc11a25cbe2p-2"),
    float.fromhex("0x1.6383d377be515p-2"),
    float.fromhex("0x1.600fa7480d2c8p-2"),
    float.fromhex("0x1.5c9f84376c244p-2"),
    float.fromhex("0x1.5933619d6eebep-2"),
    float.fromhex("0x1.55cb3703d0100p-2"),
    float.fromhex("0x1.5266fc2533bedp-2"),
    float.fromhex("0x1.4f06a8ebf6d92p-2"),
    float.fromhex("0x1.4baa357109ca2p-2"),
    float.fromhex("0x1.485199fad6ad4p-2"),
    float.fromhex("0x1.44fccefc324fep-2"),
    float.fromhex("0x1.41abcd1357a19p-2"),
    float.fromhex("0x1.3e5e8d08ed2dbp-2"),
    float.fromhex("0x1.3b1507cf143aep-2"),
    float.fromhex("0x1.37cf368081379p-2"),
    float.fromhex("0x1.348d125f9d19ep-2"),
    float.fromhex("0x1.314e94d5af62fp-2"),
    float.fromhex("0x1.2e13b77210766p-2"),
    float.fromhex("0x1.2adc73e963fddp-2"),
    float.fromhex("0x1.27a8c414db11ep-2"),
    float.fromhex("0x1.2478a1f17de89p-2"),
    float.fromhex("0x1.214c079f7cc9ep-2"),
    float.fromhex("0x1.1e22ef6188116p-2"),
    float.fromhex("0x1.1afd539c2f050p-2"),
    float.fromhex("0x1.17db2ed5454e8p-2"),
    float.fromhex("0x1.14bc7bb34ee67p-2"),
    float.fromhex("0x1.11a134fcf2423p-2"),
    float.fromhex("0x1.0e895598709c4p-2"),
    float.fromhex("0x1.0b74d88b242dap-2"),
    float.fromhex("0x1.0863b8f904336p-2"),
    float.fromhex("0x1.0555f2242e9d9p-2"),
    float.fromhex("0x1.024b7f6c7747ep-2"),
    float.fromhex("0x1.fe88b89df93c5p-3"),
    float.fromhex("0x1.f88108cb83235p-3"),
    float.fromhex("0x1.f27fe6ce998d2p-3"),
    float.fromhex("0x1.ec854a4c99c44p-3"),
    float.fromhex("0x1.e6912b2283cddp-3"),
    float.fromhex("0x1.e0a3816457184p-3"),
    float.fromhex("0x1.dabc455c7900ap-3"),
    float.fromhex("0x1.d4db6f8b2514fp-3"),
    float.fromhex("0x1.cf00f8a5e6fccp-3"),
    float.fromhex("0x1.c92cd9971df53p-3"),
    float.fromhex("0x1.c35f0b7d89d47p-3"),
    float.fromhex("0x1.bd9787abe18a1p-3"),
    float.fromhex("0x1.b7d647a8731aap-3"),
    float.fromhex("0x1.b21b452ccd13ap-3"),
    float.fromhex("0x1.ac667a2571807p-3"),
    float.fromhex("0x1.a6b7e0b19267ep-3"),
    float.fromhex("0x1.a10f7322d7e3dp-3"),
    float.fromhex("0x1.9b6d2bfd2fe5ap-3"),
    float.fromhex("0x1.95d105f6a7c27p-3"),
    float.fromhex("0x1.903afbf74fa69p-3"),
    float.fromhex("0x1.8aab09192815bp-3"),
    float.fromhex("0x1.852128a819a38p-3"),
    float.fromhex("0x1.7f9d5621f7175p-3"),
    float.fromhex("0x1.7a1f8d368a323p-3"),
    float.fromhex("0x1.74a7c9c7ab5a6p-3"),
    float.fromhex("0x1.6f3607e964716p-3"),
    float.fromhex("0x1.69ca43e21f25cp-3"),
    float.fromhex("0x1.64647a2adf19cp-3"),
    float.fromhex("0x1.5f04a76f883f9p-3"),
    float.fromhex("0x1.59aac88f31d6cp-3"),
    float.fromhex("0x1.5456da9c86835p-3"),
    float.fromhex("0x1.4f08dade31fc1p-3"),
    float.fromhex("0x1.49c0c6cf5ce2dp-3"),
    float.fromhex("0x1.447e9c20375d5p-3"),
    float.fromhex("0x1.3f4258b6931aep-3"),
    float.fromhex("0x1.3a0bfaae8d7eep-3"),
    float.fromhex("0x1.34db805b4ab88p-3"),
    float.fromhex("0x1.2fb0e847c2a65p-3"),
    float.fromhex("0x1.2a8c3137a071ap-3"),
    float.fromhex("0x1.256d5a2835eb7p-3"),
    float.fromhex("0x1.2054625183c34p-3"),
    float.fromhex("0x1.1b41492757d42p-3"),
    float.fromhex("0x1.16340e5a82d63p-3"),
    float.fromhex("0x1.112cb1da26eb9p-3"),
    float.fromhex("0x1.0c2b33d5209bap-3"),
    float.fromhex("0x1.072f94bb8bf85p-3"),
    float.fromhex("0x1.0239d54067d2ap-3"),
    float.fromhex("0x1.fa93ecb6b222cp-4"),
    float.fromhex("0x1.f0bff29520e1cp-4"),
    float.fromhex("0x1.e6f7bf29aa54bp-4"),
    float.fromhex("0x1.dd3b56176e88fp-4"),
    float.fromhex("0x1.d38abb9bd91e5p-4"),
    float.fromhex("0x1.c9e5f493b740ap-4"),
    float.fromhex("0x1.c04d0680b1015p-4"),
    float.fromhex("0x1.b6bff78f2e233p-4"),
    float.fromhex("0x1.ad3ece9caf633p-4"),
    float.fromhex("0x1.a3c9933ea6286p-4"),
    float.fromhex("0x1.9a604dc9d5b19p-4"),
    float.fromhex("0x1.9103075a4a0abp-4"),
    float.fromhex("0x1.87b1c9dbf2852p-4"),
    float.fromhex("0x1.7e6ca013eefd6p-4"),
    float.fromhex("0x1.753395aaa1176p-4"),
    float.fromhex("0x1.6c06b73694a4cp-4"),
    float.fromhex("0x1.62e6124854d18p-4"),
    float.fromhex("0x1.59d1b577466a4p-4"),
    float.fromhex("0x1.50c9b06fa2baep-4"),
    float.fromhex("0x1.47ce1401b2213p-4"),
    float.fromhex("0x1.3edef23269a86p-4"),
    float.fromhex("0x1.35fc5e4d93e70p-4"),
    float.fromhex("0x1.2d266cf9b3111p-4"),
    float.fromhex("0x1.245d344dd0d91p-4"),
    float.fromhex("0x1.1ba0cbe97897dp-4"),
    float.fromhex("0x1.12f14d0f2179dp-4"),
    float.fromhex("0x1.0a4ed2c159625p-4"),
    float.fromhex("0x1.01b979e30e497p-4"),
    float.fromhex("0x1.f262c2b6c6e35p-5"),
    float.fromhex("0x1.e16d547b25181p-5"),
    float.fromhex("0x1.d092efeadf162p-5"),
    float.fromhex("0x1.bfd3e0f282a2cp-5"),
    float.fromhex("0x1.af30790385f70p-5"),
    float.fromhex("0x1.9ea90f9295563p-5"),
    float.fromhex("0x1.8e3e02a68b5abp-5"),
    float.fromhex("0x1.7defb77af271ep-5"),
    float.fromhex("0x1.6dbe9b398d064p-5"),
    float.fromhex("0x1.5dab23cf2add4p-5"),
    float.fromhex("0x1.4db5d0e11275dp-5"),
    float.fromhex("0x1.3ddf2ce98eecbp-5"),
    float.fromhex("0x1.2e27ce83df497p-5"),
    float.fromhex("0x1.1e9059f1f6abcp-5"),
    float.fromhex("0x1.0f1982e968011p-5"),
    float.fromhex("0x1.ff881d718a5c4p-6"),
    float.fromhex("0x1.e121adb828c75p-6"),
    float.fromhex("0x1.c301983cd091ap-6"),
    float.fromhex("0x1.a529f4e22ebf8p-6"),
    float.fromhex("0x1.879d1b600c10ap-6"),
    float.fromhex("0x1.6a5daf40bbf82p-6"),
    float.fromhex("0x1.4d6eaf2fbb064p-6"),
    float.fromhex("0x1.30d388dab5e13p-6"),
    float.fromhex("0x1.1490334603012p-6"),
    float.fromhex("0x1.f152a4f72dd49p-7"),
    float.fromhex("0x1.ba48d274f8facp-7"),
    float.fromhex("0x1.841040d8da478p-7"),
    float.fromhex("0x1.4eb96421acfe0p-7"),
    float.fromhex("0x1.1a59229952f92p-7"),
    float.fromhex("0x1.ce160f8ec6837p-8"),
    float.fromhex("0x1.69ea8d90cb85dp-8"),
    float.fromhex("0x1.08a1f03b0b1fdp-8"),
    float.fromhex("0x1.55f9f43c1b067p-9"),
    float.fromhex("0x1.4a605b6b9f70fp-10"),
)

KE = (
    7971545857431494,
    0,
    5485857970336126,
    6877400373607440,
    7489560515621038,
    7829793950745724,
    8045251395085594,
    8193552821270898,
    8301707212298418,
    8384003209374832,
    8448689755168200,
    8500854585063478,
    8543802742323106,
    8579772857648236,
    8610334328270398,
    8636619566280862,
    8659465946817878,
    8679505875409358,
    8697225801520776,
    8713005977443536,
    8727147906454692,
    8739893704890038,
    8751440024696698,
    8761948238062960,
    8771552003860596,
    8780362968290610,
    8788475114930438,
    8795968123070796,
    8802909988292858,
    8809359087581710,
    8815365821575970,
    8820973931588800,
    8826221564107158,
    8831142137483404,
    8835765052397426,
    8840116277974648,
    8844218838221542,
    8848093218006260,
    8851757703688506,
    8855228670347734,
    8858520825126080,
    8861647414312948,
    8864620400320394,
    8867450613535032,
    8870147883110754,
    8872721150032146,
    8875178565190242,
    8877527574738170,
    8879774994610604,
    8881927075778634,
    8883989561556502,
    8885967738067168,
    8887866478800856,
    8889690284057818,
    8891443315947666,
    8893129429518482,
    8894752200505984,
    8896314950123264,
    8897820767252858,
    8899272528353282,
    8900672915349966,
    8902024431744704,
    8903329417147192,
    8904590060406012,
    8905808411494018,
    8906986392283810,
    8908125806332284,
    8909228347778946,
    8910295609450180,
    8911329090250868,
    8912330201915374,
    8913300275181656,
    8914240565445170,
    8915152257942916,
    8916036472512488,
    8916894267966144,
    8917726646115692,
    8918534555480190,
    8919318894705170,
    8920080515719156,
    8920820226650618,
    8921538794526266,
    8922236947769418,
    8922915378515480,
    8923574744759820,
    8924215672351958,
    8924838756848636,
    8925444565237162,
    8926033637539416,
    8926606488305930,
    8927163608008600,
    8927705464339880,
    8928232503425544,
    8928745150957558,
    8929243813252980,
    8929728878244356,
    8930200716406566,
    8930659681624710,
    8931106112007190,
    8931540330647876,
    8931962646340834,
    8932373354250910,
    8932772736543124,
    8933161062973652,
    8933538591444894,
    8933905568527004,
    8934262229948010,
    8934608801054528,
    8934945497244894,
    8935272524376414,
    8935590079148328,
    8935898349461876,
    8936197514758882,
    8936487746340036,
    8936769207664048,
    8937042054628744,
    8937306435835058,
    8937562492834854,
    8937810360363402,
    8938050166557284,
    8938282033158466,
    8938506075705162,
    8938722403710132,
    8938931120826946,
    8939132325004766,
    8939326108632062,
    8939512558669762,
    8939691756774158,
    8939863779409990,
    8940028697953972,
    8940186578789100,
    8940337483389966,
    8940481468399302,
    8940618585695992,
    8940748882454662,
    8940872401197050,
    8940989179835208,
    8941099251706688,
    8941202645601704,
    8941299385782368,
    8941389491993960,
    8941472979468230,
    8941549858918698,
    8941620136527848,
    8941683813926148,
    8941740888162738,
    8941791351667640,
    8941835192205302,
    8941872392819226,
    8941902931767472,
    8941926782448690,
    8941943913318396,
    8941954287795084,
    8941957864155806,
    8941954595420724,
    8941944429226144,
    8941927307685492,
    8941903167237602,
    8941871938481652,
    8941833545998016,
    8941787908154234,
    8941734936895206,
    8941674537516674,
    8941606608420918,
    8941531040853536,
    8941447718620056,
    8941356517781006,
    8941257306323958,
    8941149943810914,
    8941034280999228,
    8940910159434164,
    8940777411010892,
    8940635857503634,
    8940485310059376,
    8940325568653336,
    8940156421503112,
    8939977644438114,
    8939789000220574,
    8939590237814000,
    8939381091594596,
    8939161280500638,
    8938930507114326,
    8938688456670012,
    8938434795982096,
    8938169172285110,
    8937891211977748,
    8937600519261604,
    8937296674664432,
    8936979233436516,
    8936647723807416,
    8936301645088910,
    8935940465608202,
    8935563620453574,
    8935170509012442,
    8934760492279316,
    8934332889908232,
    8933886976981030,
    8933421980459034,
    8932937075281380,
    8932431380068266,
    8931903952381602,
    8931353783488908,
    8930779792568492,
    8930180820284952,
    8929555621653500,
    8928902858099222,
    8928221088602964,
    8927508759808348,
    8926764194944404,
    8925985581394242,
    8925170956711904,
    8924318192855506,
    8923424978364230,
    8922488798157886,
    8921506910578770,
    8920476321224196,
    8919393753031106,
    8918255611967910,
    8917057947558148,
    8915796407299442,
    8914466183841290,
    8913061953535784,
    8911577804662434,
    8910007153233212,
    8908342643782164,
    8906576031902208,
    8904698044465300,
    8902698212389652,
    8900564669414922,
    8898283908495804,
    8895840484961220,
    8893216652275640,
    8890391911743352,
    8887342451323378,
    8884040440144924,
    8880453133239800,
    8876541723776518,
    8872259855113102,
    8867551668208538,
    8862349204777254,
    8856568902200012,
    8850106784293916,
    8842831740745002,
    8834575940248166,
    8825120832349124,
    8814176156651890,
    8801347484544986,
    8786084197194146,
    8767592496903178,
    8744682338845716,
    8715480686119910,
    8676850260251934,
    8623083654098352,
    8542525795804796,
    8406823688997808,
    8122426762520768,
)

WE = (
    float.fromhex("0x1.164ec94bf5dc1p-50"),
    float.fromhex("0x1.0589d8b5d4119p-57"),
    float.fromhex("0x1.ad6b2495b4d2bp-57"),
    float.fromhex("0x1.19335a95b8dbap-56"),
    float.fromhex("0x1.522e6e54a2a73p-56"),
    float.fromhex("0x1.85090fbc27a80p-56"),
    float.fromhex("0x1.b38d1ef79b7ccp-56"),
    float.fromhex("0x1.decd8b76dbd98p-56"),
    float.fromhex("0x1.03bf049c65c3cp-55"),
    float.fromhex("0x1.170db24d6f670p-55"),
    float.fromhex("0x1.2980290da2633p-55"),
    float.fromhex("0x1.3b388fe3d6ecap-55"),
    float.fromhex("0x1.4c515c60bfe21p-55"),
    float.fromhex("0x1.5cdf89d024ac3p-55"),
    float.fromhex("0x1.6cf40f0a72bbdp-55"),
    float.fromhex("0x1.7c9cdda17d019p-55"),
    float.fromhex("0x1.8be5954d3606fp-55"),
    float.fromhex("0x1.9ad80552237d2p-55"),
    float.fromhex("0x1.a97c8be5d5203p-55"),
    float.fromhex("0x1.b7da5dddda3c4p-55"),
    float.fromhex("0x1.c5f7bd78c3f89p-55"),
    float.fromhex("0x1.d3da24df17c36p-55"),
    float.fromhex("0x1.e186678f1735ap-55"),
    float.fromhex("0x1.ef00ccf5f4faap-55"),
    float.fromhex("0x1.fc4d25d683209p-55"),
    float.fromhex("0x1.04b76ed6a7558p-54"),
    float.fromhex("0x1.0b348479b80fcp-54"),
    float.fromhex("0x1.119f38749f5afp-54"),
    float.fromhex("0x1.17f8ceb4bdfa0p-54"),
    float.fromhex("0x1.1e426e93e49e7p-54"),
    float.fromhex("0x1.247d26538ff2ep-54"),
    float.fromhex("0x1.2aa9ee123680bp-54"),
    float.fromhex("0x1.30c9aa526da4bp-54"),
    float.fromhex("0x1.36dd2e26d8202p-54"),
    float.fromhex("0x1.3ce53d12162a0p-54"),
    float.fromhex("0x1.42e28ca706748p-54"),
    float.fromhex("0x1.48d5c5f35e712p-54"),
    float.fromhex("0x1.4ebf86bcd0b93p-54"),
    float.fromhex("0x1.54a0629786f4dp-54"),
    float.fromhex("0x1.5a78e3db8befdp-54"),
    float.fromhex("0x1.60498c7dd2ecfp-54"),
    float.fromhex("0x1.6612d6d0c68e0p-54"),
    float.fromhex("0x1.6bd5362faa944p-54"),
    float.fromhex("0x1.71911797990bbp-54"),
    float.fromhex("0x1.7746e23077973p-54"),
    float.fromhex("0x1.7cf6f7c7e8172p-54"),
    float.fromhex("0x1.82a1b53fed599p-54"),
    float.fromhex("0x1.884772f2be1ecp-54"),
    float.fromhex("0x1.8de8850d0c52ap-54"),
    float.fromhex("0x1.93853bdfda244p-54"),
    float.fromhex("0x1.991de42ad1338p-54"),
    float.fromhex("0x1.9eb2c75ff03bfp-54"),
    float.fromhex("0x1.a4442be14884ap-54"),
    float.fromhex("0x1.a9d255396d261p-54"),
    float.fromhex("0x1.af5d844f224c9p-54"),
    float.fromhex("0x1.b4e5f794c979bp-54"),
    float.fromhex("0x1.ba6beb33f8f89p-54"),
    float.fromhex("0x1.bfef99359fe99p-54"),
    float.fromhex("0x1.c57139a70d29fp-54"),
    float.fromhex("0x1.caf102bc25adbp-54"),
    float.fromhex("0x1.d06f28ef0e6fbp-54"),
    float.fromhex("0x1.d5ebdf1d86b8dp-54"),
    float.fromhex("0x1.db6756a429057p-54"),
    float.fromhex("0x1.e0e1bf77c31fep-54"),
    float.fromhex("0x1.e65b483cf1044p-54"),
    float.fromhex("0x1.ebd41e5e21b62p-54"),
    float.fromhex("0x1.f14c6e202949fp-54"),
    float.fromhex("0x1.f6c462b57feb5p-54"),
    float.fromhex("0x1.fc3c26504a9a1p-54"),
    float.fromhex("0x1.00d9f119a3cd9p-53"),
    float.fromhex("0x1.0395df60db162p-53"),
    float.fromhex("0x1.0651f1c7276f8p-53"),
    float.fromhex("0x1.090e3bb4b0072p-53"),
    float.fromhex("0x1.0bcad03710137p-53"),
    float.fromhex("0x1.0e87c207a2f66p-53"),
    float.fromhex("0x1.114523917ac15p-53"),
    float.fromhex("0x1.140306f707dbep-53"),
    float.fromhex("0x1.16c17e1777ffbp-53"),
    float.fromhex("0x1.19809a93d2396p-53"),
    float.fromhex("0x1.1c406dd3d5283p-53"),
    float.fromhex("0x1.1f01090a9c4e2p-53"),
    float.fromhex("0x1.21c27d3b10e05p-53"),
    float.fromhex("0x1.2484db3c2a329p-53"),
    float.fromhex("0x1.274833bd0189fp-53"),
    float.fromhex("0x1.2a0c9748bcdaap-53"),
    float.fromhex("0x1.2cd2164a53b5dp-53"),
    float.fromhex("0x1.2f98c11031721p-53"),
    float.fromhex("0x1.3260a7cfb7611p-53"),
    float.fromhex("0x1.3529daa8a1ba1p-53"),
    float.fromhex("0x1.37f469a851af0p-53"),
    float.fromhex("0x1.3ac064ccfeffcp-53"),
    float.fromhex("0x1.3d8ddc08d336dp-53"),
    float.fromhex("0x1.405cdf44f09c4p-53"),
    float.fromhex("0x1.432d7e6466cd0p-53"),
    float.fromhex("0x1.45ffc94716ca7p-53"),
    float.fromhex("0x1.48d3cfcc883c4p-53"),
    float.fromhex("0x1.4ba9a1d6b18a4p-53"),
    float.fromhex("0x1.4e814f4cb45eap-53"),
    float.fromhex("0x1.515ae81d900fbp-53"),
    float.fromhex("0x1.54367c42cb5f8p-53"),
    float.fromhex("0x1.57141bc316f27p-53"),
    float.fromhex("0x1.59f3d6b4e9cf9p-53"),
    float.fromhex("0x1.5cd5bd4119335p-53"),
    float.fromhex("0x1.5fb9dfa56cf26p-53"),
    float.fromhex("0x1.62a04e3731a2ep-53"),
    float.fromhex("0x1.65891965c9b8cp-53"),
    float.fromhex("0x1.687451bd3ebeep-53"),
    float.fromhex("0x1.6b6207e8d3cdfp-53"),
    float.fromhex("0x1.6e524cb59a608p-53"),
    float.fromhex("0x1.714531150a9fbp-53"),
    float.fromhex("0x1.743ac61fa041cp-53"),
    float.fromhex("0x1.77331d177d130p-53"),
    float.fromhex("0x1.7a2e476b1240ap-53"),
    float.fromhex("0x1.7d2c56b7d17f7p-53"),
    float.fromhex("0x1.802d5ccce7277p-53"),
    float.fromhex("0x1.83316badfe62ap-53"),
    float.fromhex("0x1.86389596108e7p-53"),
    float.fromhex("0x1.8942ecfa40f54p-53"),
    float.fromhex("0x1.8c50848cc6094p-53"),
    float.fromhex("0x1.8f616f3fe1513p-53"),
    float.fromhex("0x1.9275c048e73e1p-53"),
    float.fromhex("0x1.958d8b235828ap-53"),
    float.fromhex("0x1.98a8e3940bbf4p-53"),
    float.fromhex("0x1.9bc7ddac7035dp-53"),
    float.fromhex("0x1.9eea8dcdde951p-53"),
    float.fromhex("0x1.a21108ad0592dp-53"),
    float.fromhex("0x1.a53b63556c690p-53"),
    float.fromhex("0x1.a869b32d0f30fp-53"),
    float.fromhex("0x1.ab9c0df81657ap-53"),
    float.fromhex("0x1.aed289dcaacffp-53"),
    float.fromhex("0x1.b20d3d66e8bb5p-53"),
    float.fromhex("0x1.b54c3f8cf2542p-53"),
    float.fromhex("0x1.b88fa7b324fb6p-53"),
    float.fromhex("0x1.bbd78db072610p-53"),
    float.fromhex("0x1.bf2409d2dfd85p-53"),
    float.fromhex("0x1.c27534e42e02dp-53"),
    float.fromhex("0x1.c5cb282eab1a4p-53"),
    float.fromhex("0x1.c925fd82323fbp-53"),
    float.fromhex("0x1.cc85cf395a56cp-53"),
    float.fromhex("0x1.cfeab83ed7180p-53"),
    float.fromhex("0x1.d354d4130f2adp-53"),
    float.fromhex("0x1.d6c43ed1ea3fep-53"),
    float.fromhex("0x1.da391538da50ap-53"),
    float.fromhex("0x1.ddb374ad2357fp-53"),
    float.fromhex("0x1.e1337b426509bp-53"),
    float.fromhex("0x1.e4b947c16a452p-53"),
    float.fromhex("0x1.e844f9af4237fp-53"),
    float.fromhex("0x1.ebd6b154a7678p-53"),
    float.fromhex("0x1.ef6e8fc5b9168p-53"),
    float.fromhex("0x1.f30cb6ea0bc7fp-53"),
    float.fromhex("0x1.f6b1498515ed0p-53"),
    float.fromhex("0x1.fa5c6b3efe1e5p-53"),
    float.fromhex("0x1.fe0e40add09d8p-53"),
    float.fromhex("0x1.00e377af911d4p-52"),
    float.fromhex("0x1.02c34ef11391bp-52"),
    float.fromhex("0x1.04a6b9e9224a3p-52"),
    float.fromhex("0x1.068dccf1126dbp-52"),
    float.fromhex("0x1.08789cf3aad0fp-52"),
    float.fromhex("0x1.0a673f733c819p-52"),
    float.fromhex("0x1.0c59ca900946fp-52"),
    float.fromhex("0x1.0e50550efcfb7p-52"),
    float.fromhex("0x1.104af660befcep-52"),
    float.fromhex("0x1.1249c6a92154ap-52"),
    float.fromhex("0x1.144cdec6f3a2bp-52"),
    float.fromhex("0x1.1654585c404c1p-52"),
    float.fromhex("0x1.18604dd6fae9ep-52"),
    float.fromhex("0x1.1a70da7a27820p-52"),
    float.fromhex("0x1.1c861a6782a5ap-52"),
    float.fromhex("0x1.1ea02aa9b3370p-52"),
    float.fromhex("0x1.20bf293f0f4a2p-52"),
    float.fromhex("0x1.22e33524fe550p-52"),
    float.fromhex("0x1.250c6e6403bbap-52"),
    float.fromhex("0x1.273af61c7daa6p-52"),
    float.fromhex("0x1.296eee942532bp-52"),
    float.fromhex("0x1.2ba87b445db51p-52"),
    float.fromhex("0x1.2de7c0e962d70p-52"),
    float.fromhex("0x1.302ce59265965p-52"),
    float.fromhex("0x1.327810b2aa7d0p-52"),
    float.fromhex("0x1.34c96b33bc965p-52"),
    float.fromhex("0x1.37211f88ca856p-52"),
    float.fromhex("0x1.397f59c345143p-52"),
    float.fromhex("0x1.3be447a8d8b83p-52"),
    float.fromhex("0x1.3e5018cadded0p-52"),
    float.fromhex("0x1.40c2fe9f5eeadp-52"),
    float.fromhex("0x1.433d2c9bd42f8p-52"),
    float.fromhex("0x1.45bed851bc92cp-52"),
    float.fromhex("0x1.4848398d39432p-52"),
    float.fromhex("0x1.4ad98a75da14cp-52"),
    float.fromhex("0x1.4d7307b1cb127p-52"),
    float.fromhex("0x1.5014f08b99508p-52"),
    float.fromhex("0x1.52bf871acaab2p-52"),
    float.fromhex("0x1.5573106f8a75ap-52"),
    float.fromhex("0x1.582fd4c1b4461p-52"),
    float.fromhex("0x1.5af61fa38e107p-52"),
    float.fromhex("0x1.5dc640388bd9ep-52"),
    float.fromhex("0x1.60a0897081879p-52"),
    float.fromhex("0x1.63855247b2e94p-52"),
    float.fromhex("0x1.6674f60c3f432p-52"),
    float.fromhex("0x1.696fd4a9748eep-52"),
    float.fromhex("0x1.6c7652f9a7b1ep-52"),
    float.fromhex("0x1.6f88db1f42507p-52"),
    float.fromhex("0x1.72a7dce5cd218p-52"),
    float.fromhex("0x1.75d3ce2bd71c3p-52"),
    float.fromhex("0x1.790d2b56b71f9p-52"),
    float.fromhex("0x1.7c5477d1476d3p-52"),
    float.fromhex("0x1.7faa3e96e1412p-52"),
    float.fromhex("0x1.830f12cc0bec3p-52"),
    float.fromhex("0x1.8683906687342p-52"),
    float.fromhex("0x1.8a085ce695babp-52"),
    float.fromhex("0x1.8d9e2823b3695p-52"),
    float.fromhex("0x1.9145ad2f37544p-52"),
    float.fromhex("0x1.94ffb34fc2a0ep-52"),
    float.fromhex("0x1.98cd0f18d1ad8p-52"),
    float.fromhex("0x1.9caea3a24d9eap-52"),
    float.fromhex("0x1.a0a563e49f178p-52"),
    float.fromhex("0x1.a4b2543e84c3bp-52"),
    float.fromhex("0x1.a8d68c2ad86eap-52"),
    float.fromhex("0x1.ad13382d845c4p-52"),
    float.fromhex("0x1.b1699c003b60ap-52"),
    float.fromhex("0x1.b5db15091ea0fp-52"),
    float.fromhex("0x1.ba691d276da5ep-52"),
    float.fromhex("0x1.bf154de4bef77p-52"),
    float.fromhex("0x1.c3e1641c2e0a7p-52"),
    float.fromhex("0x1.c8cf442c8c8f4p-52"),
    float.fromhex("0x1.cde0fecf2a97fp-52"),
    float.fromhex("0x1.d318d6b2738c5p-52"),
    float.fromhex("0x1.d87946fec3becp-52"),
    float.fromhex("0x1.de050af4ef19fp-52"),
    float.fromhex("0x1.e3bf26e190960p-52"),
    float.fromhex("0x1.e9aaf2af383c1p-52"),
    float.fromhex("0x1.efcc26750ea4ap-52"),
    float.fromhex("0x1.f626e9791f7a7p-52"),
    float.fromhex("0x1.fcbfe43f6c6e5p-52"),
    float.fromhex("0x1.01ce2b362ec2ep-51"),
    float.fromhex("0x1.056118bf58eefp-51"),
    float.fromhex("0x1.091c1cdcba54ep-51"),
    float.fromhex("0x1.0d031785d48a0p-51"),
    float.fromhex("0x1.111a8034392a6p-51"),
    float.fromhex("0x1.156786775442ap-51"),
    float.fromhex("0x1.19f03bcb3c2d6p-51"),
    float.fromhex("0x1.1ebbca0c9fa7cp-51"),
    float.fromhex("0x1.23d2bb659919fp-51"),
    float.fromhex("0x1.293f5ae49aaa5p-51"),
    float.fromhex("0x1.2f0e38a4411f0p-51"),
    float.fromhex("0x1.354ee27ccf75ep-51"),
    float.fromhex("0x1.3c14ec7c8b861p-51"),
    float.fromhex("0x1.4379766e41362p-51"),
    float.fromhex("0x1.4b9d7cd4751d1p-51"),
    float.fromhex("0x1.54ad83ccf73f6p-51"),
    float.fromhex("0x1.5ee7ae17313d2p-51"),
    float.fromhex("0x1.6aa676d4bbf72p-51"),
    float.fromhex("0x1.78750d6eac62fp-51"),
    float.fromhex("0x1.8939fe6f2ed19p-51"),
    float.fromhex("0x1.9e9dc0d487b85p-51"),
    float.fromhex("0x1.bc39e51da71fcp-51"),
    float.fromhex("0x1.ec9d9297ebb83p-51"),
)

FE = (
    float.fromhex("0x1.0000000000000p+0"),
    float.fromhex("0x1.e0545e5881137p-1"),
    float.fromhex("0x1.cd0a65081fff1p-1"),
    float.fromhex("0x1.be5007beb7b27p-1"),
    float.fromhex("0x1.b210f0ee67f2ap-1"),
    float.fromhex("0x1.a76baa562fae7p-1"),
    float.fromhex("0x1.9de9715556d9bp-1"),
    float.fromhex("0x1.95431c455aa39p-1"),
    float.fromhex("0x1.8d4a376d3d22fp-1"),
    float.fromhex("0x1.85de87806c5b8p-1"),
    float.fromhex("0x1.7ee8a2d243126p-1"),
    float.fromhex("0x1.7856e9b09d47ep-1"),
    float.fromhex("0x1.721bb5ba94b63p-1"),
    float.fromhex("0x1.6c2c3498418c6p-1"),
    float.fromhex("0x1.667fa6d4f5c06p-1"),
    float.fromhex("0x1.610edc1a7af66p-1"),
    float.fromhex("0x1.5bd3d694cac75p-1"),
    float.fromhex("0x1.56c9882da8773p-1"),
    float.fromhex("0x1.51eba1578899ap-1"),
    float.fromhex("0x1.4d366c151f8afp-1"),
    float.fromhex("0x1.48a6afb8ee069p-1"),
    float.fromhex("0x1.44399afa8e125p-1"),
    float.fromhex("0x1.3fecb2bb18b80p-1"),
    float.fromhex("0x1.3bbdc44e1d114p-1"),
    float.fromhex("0x1.37aada708ddd9p-1"),
    float.fromhex("0x1.33b23450e6318p-1"),
    float.fromhex("0x1.2fd23e345da5ep-1"),
    float.fromhex("0x1.2c098b61f4f24p-1"),
    float.fromhex("0x1.2856d111132bdp-1"),
    float.fromhex("0x1.24b8e228c50a3p-1"),
    float.fromhex("0x1.212eaba813ec8p-1"),
    float.fromhex("0x1.1db7319877b89p-1"),
    float.fromhex("0x1.1a518c71e3b25p-1"),
    float.fromhex("0x1.16fce6dce6feep-1"),
    float.fromhex("0x1.13b87bc33169cp-1"),
    float.fromhex("0x1.108394a1cc38dp-1"),
    float.fromhex("0x1.0d5d8812b1e2bp-1"),
    float.fromhex("0x1.0a45b8854d02ap-1"),
    float.fromhex("0x1.073b931ee3b7dp-1"),
    float.fromhex("0x1.043e8ebd26548p-1"),
    float.fromhex("0x1.014e2b160f324p-1"),
    float.fromhex("0x1.fcd3dfe214576p-2"),
    float.fromhex("0x1.f722d8ebfc5fap-2"),
    float.fromhex("0x1.f1886d1eb424dp-2"),
    float.fromhex("0x1.ec03d4b969d90p-2"),
    float.fromhex("0x1.e6945367dd351p-2"),
    float.fromhex("0x1.e139375e137fcp-2"),
    float.fromhex("0x1.dbf1d88a7210cp-2"),
    float.fromhex("0x1.d6bd97db9ed7ap-2"),
    float.fromhex("0x1.d19bde97e1a0bp-2"),
    float.fromhex("0x1.cc8c1dc40e092p-2"),
    float.fromhex("0x1.c78dcd983fb60p-2"),
    float.fromhex("0x1.c2a06d00ea583p-2"),
    float.fromhex("0x1.bdc3812aeeeb5p-2"),
    float.fromhex("0x1.b8f6951990b88p-2"),
    float.fromhex("0x1.b43939454806fp-2"),
    float.fromhex("0x1.af8b03428ef5fp-2"),
    float.fromhex("0x1.aaeb8d6fdf6e5p-2"),
    float.fromhex("0x1.a65a76aa30140p-2"),
    float.fromhex("0x1.a1d76207521f4p-2"),
    float.fromhex("0x1.9d61f695a3792p-2"),
    float.fromhex("0x1.98f9df2097ba8p-2"),
    float.fromhex("0x1.949ec9f9a8110p-2"),
    float.fromhex("0x1.905068c545d04p-2"),
    float.fromhex("0x1.8c0e704b75d39p-2"),
    float.fromhex("0x1.87d8984bc3f8cp-2"),
    float.fromhex("0x1.83ae9b5446138p-2"),
    float.fromhex("0x1.7f90369b6ce59p-2"),
    float.fromhex("0x1.7b7d29dc6801ep-2"),
    float.fromhex("0x1.77753735e72e3p-2"),
    float.fromhex("0x1.7378230b08deap-2"),
    float.fromhex("0x1.6f85b3e649e9dp-2"),
    float.fromhex("0x1.6b9db25e4e99cp-2"),
    float.fromhex("0x1.67bfe8fc60d9fp-2"),
    float.fromhex("0x1.63ec2424827e4p-2"),
    float.fromhex("0x1.602231fef5876p-2"),
    float.fromhex("0x1.5c61e2631ee6cp-2"),
    float.fromhex("0x1.58ab06c3aa9efp-2"),
    float.fromhex("0x1.54fd721bda3e7p-2"),
    float.fromhex("0x1.5158f8dde89f5p-2"),
    float.fromhex("0x1.4dbd70e26f91dp-2"),
    float.fromhex("0x1.4a2ab158bdad3p-2"),
    float.fromhex("0x1.46a092b80beefp-2"),
    float.fromhex("0x1.431eeeb1841e2p-2"),
    float.fromhex("0x1.3fa5a0230a14ep-2"),
    float.fromhex("0x1.3c34830abb285p-2"),
    float.fromhex("0x1.38cb747b17defp-2"),
    float.fromhex("0x1.356a528fcd0ddp-2"),
    float.fromhex("0x1.3210fc6312435p-2"),
    float.fromhex("0x1.2ebf520394270p-2"),
    float.fromhex("0x1.2b75346ae2262p-2"),
    float.fromhex("0x1.2832857457629p-2"),
    float.fromhex("0x1.24f727d4776fdp-2"),
    float.fromhex("0x1.21c2ff10b7effp-2"),
    float.fromhex("0x1.1e95ef77b09dbp-2"),
    float.fromhex("0x1.1b6fde19abc5ap-2"),
    float.fromhex("0x1.1850b0c191982p-2"),
    float.fromhex("0x1.15384dee291efp-2"),
    float.fromhex("0x1.12269ccba9fbap-2"),
    float.fromhex("0x1.0f1b852d9a66cp-2"),
    float.fromhex("0x1.0c16ef88f5333p-2"),
    float.fromhex("0x1.0918c4ee93e13p-2"),
    float.fromhex("0x1.0620ef05d90d2p-2"),
    float.fromhex("0x1.032f580797c2cp-2"),
    float.fromhex("0x1.0043eab93476ap-2"),
    float.fromhex("0x1.fabd24cff9354p-3"),
    float.fromhex("0x1.f4fe75c963e7ep-3"),
    float.fromhex("0x1.ef4ba0fe8e09bp-3"),
    float.fromhex("0x1.e9a48005940f2p-3"),
    float.fromhex("0x1.e408ed62f83a7p-3"),
    float.fromhex("0x1.de78c48224f39p-3"),
    float.fromhex("0x1.d8f3e1ae3eeb8p-3"),
    float.fromhex("0x1.d37a220b431fdp-3"),
    float.fromhex("0x1.ce0b638f6d09fp-3"),
    float.fromhex("0x1.c8a784fce1802p-3"),
    float.fromhex("0x1.c34e65db9afeep-3"),
    float.fromhex("0x1.bdffe67394435p-3"),
    float.fromhex("0x1.b8bbe7c72e4a5p-3"),
    float.fromhex("0x1.b3824b8dcef3ep-3"),
    float.fromhex("0x1.ae52f42eb5b0bp-3"),
    float.fromhex("0x1.a92dc4bc03c49p-3"),
    float.fromhex("0x1.a412a0edf5cbcp-3"),
    float.fromhex("0x1.9f016d1e4c512p-3"),
    float.fromhex("0x1.99fa0e43e1623p-3"),
    float.fromhex("0x1.94fc69ee692a1p-3"),
    float.fromhex("0x1.900866425bb79p-3"),
    float.fromhex("0x1.8b1de9f5062d5p-3"),
    float.fromhex("0x1.863cdc48c1af9p-3"),
    float.fromhex("0x1.816525094e7e6p-3"),
    float.fromhex("0x1.7c96ac8851baep-3"),
    float.fromhex("0x1.77d15b99f46fep-3"),
    float.fromhex("0x1.73151b91a2839p-3"),
    float.fromhex("0x1.6e61d63ee84eap-3"),
    float.fromhex("0x1.69b775ea6da28p-3"),
    float.fromhex("0x1.6515e5530d1acp-3"),
    float.fromhex("0x1.607d0fab06a31p-3"),
    float.fromhex("0x1.5bece0954c2b6p-3"),
    float.fromhex("0x1.57654422e78f5p-3"),
    float.fromhex("0x1.52e626d078c49p-3"),
    float.fromhex("0x1.4e6f7583cb6fap-3"),
    float.fromhex("0x1.4a011d8983096p-3"),
    float.fromhex("0x1.459b0c92dccc6p-3"),
    float.fromhex("0x1.413d30b386a9ap-3"),
    float.fromhex("0x1.3ce7785f8a905p-3"),
    float.fromhex("0x1.3899d2694d5c9p-3"),
    float.fromhex("0x1.34542dffa0cafp-3"),
    float.fromhex("0x1.30167aabe7d6ep-3"),
    float.fromhex("0x1.2be0a8504cf34p-3"),
    float.fromhex("0x1.27b2a72609940p-3"),
    float.fromhex("0x1.238c67bbbe878p-3"),
    float.fromhex("0x1.1f6ddaf3dca65p-3"),
    float.fromhex("0x1.1b56f2031d666p-3"),
    float.fromhex("0x1.17479e6f0ae78p-3"),
    float.fromhex("0x1.133fd20c9712fp-3"),
    float.fromhex("0x1.0f3f7efec1720p-3"),
    float.fromhex("0x1.0b4697b54b62fp-3"),
    float.fromhex("0x1.07550eeb7a5bep-3"),
    float.fromhex("0x1.036ad7a6e7f04p-3"),
    float.fromhex("0x1.ff0fca6cbea8dp-4"),
    float.fromhex("0x1.f758566190414p-4"),
    float.fromhex("0x1.efaf3ae83c33cp-4"),
    float.fromhex("0x1.e8146048eb9ccp-4"),
    float.fromhex("0x1.e087af561bafbp-4"),
    float.fromhex("0x1.d909116ad9398p-4"),
    float.fromhex("0x1.d198706914dd7p-4"),
    float.fromhex("0x1.ca35b6b80fd57p-4"),
    float.fromhex("0x1.c2e0cf42e10afp-4"),
    float.fromhex("0x1.bb99a5771268fp-4"),
    float.fromhex("0x1.b460254356548p-4"),
    float.fromhex("0x1.ad343b1655465p-4"),
    float.fromhex("0x1.a615d3dd938b7p-4"),
    float.fromhex("0x1.9f04dd046f428p-4"),
    float.fromhex("0x1.9801447336b70p-4"),
    float.fromhex("0x1.910af88e574b9p-4"),
    float.fromhex("0x1.8a21e835a533bp-4"),
    float.fromhex("0x1.834602c3bc4bap-4"),
    float.fromhex("0x1.7c77380d7a6f3p-4"),
    float.fromhex("0x1.75b5786193c1ep-4"),
    float.fromhex("0x1.6f00b488416b6p-4"),
    float.fromhex("0x1.6858ddc30b620p-4"),
    float.fromhex("0x1.61bde5ccadef7p-4"),
    float.fromhex("0x1.5b2fbed91bb3ep-4"),
    float.fromhex("0x1.54ae5b959d036p-4"),
    float.fromhex("0x1.4e39af290d929p-4"),
    float.fromhex("0x1.47d1ad343985cp-4"),
    float.fromhex("0x1.417649d25b10ep-4"),
    float.fromhex("0x1.3b277999b9f9ep-4"),
    float.fromhex("0x1.34e5319c6e718p-4"),
    float.fromhex("0x1.2eaf676948dd1p-4"),
    float.fromhex("0x1.2886110ce0570p-4"),
    float.fromhex("0x1.22692512c9d8cp-4"),
    float.fromhex("0x1.1c589a86fa340p-4"),
    float.fromhex("0x1.165468f755392p-4"),
    float.fromhex("0x1.105c88756ca50p-4"),
    float.fromhex("0x1.0a70f19871b3bp-4"),
    float.fromhex("0x1.04919d7f5c817p-4"),
    float.fromhex("0x1.fd7d0ba699676p-5"),
    float.fromhex("0x1.f1ef49944e834p-5"),
    float.fromhex("0x1.e679ea52eb2e5p-5"),
    float.fromhex("0x1.db1ce49315810p-5"),
    float.fromhex("0x1.cfd83031e794ap-5"),
    float.fromhex("0x1.c4abc640721e9p-5"),
    float.fromhex("0x1.b997a10bed985p-5"),
    float.fromhex("0x1.ae9bbc26a8084p-5"),
    float.fromhex("0x1.a3b81471bf138p-5"),
    float.fromhex("0x1.98eca827b7c4cp-5"),
    float.fromhex("0x1.8e3976e80776dp-5"),
    float.fromhex("0x1.839e81c3a396bp-5"),
    float.fromhex("0x1.791bcb4ab089ep-5"),
    float.fromhex("0x1.6eb1579b6af52p-5"),
    float.fromhex("0x1.645f2c726a041p-5"),
    float.fromhex("0x1.5a25513c5d2cap-5"),
    float.fromhex("0x1.5003cf296c5ebp-5"),
    float.fromhex("0x1.45fab14266b19p-5"),
    float.fromhex("0x1.3c0a047ff18ffp-5"),
    float.fromhex("0x1.3231d7e3f14aep-5"),
    float.fromhex("0x1.28723c956c00cp-5"),
    float.fromhex("0x1.1ecb45ff312d4p-5"),
    float.fromhex("0x1.153d09f19b3a1p-5"),
    float.fromhex("0x1.0bc7a0c7cd651p-5"),
    float.fromhex("0x1.026b2590dfaeep-5"),
    float.fromhex("0x1.f24f6c7af9890p-6"),
    float.fromhex("0x1.dffae7a517468p-6"),
    float.fromhex("0x1.cdd9054331b0cp-6"),
    float.fromhex("0x1.bbea150fa5870p-6"),
    float.fromhex("0x1.aa2e6e6924e9bp-6"),
    float.fromhex("0x1.98a670f132a48p-6"),
    float.fromhex("0x1.8752853ec9967p-6"),
    float.fromhex("0x1.76331da87fc96p-6"),
    float.fromhex("0x1.6548b72a24077p-6"),
    float.fromhex("0x1.5493da6ab0251p-6"),
    float.fromhex("0x1.44151ce87f0bep-6"),
    float.fromhex("0x1.33cd225315d84p-6"),
    float.fromhex("0x1.23bc9e1b93a32p-6"),
    float.fromhex("0x1.13e4554725f5fp-6"),
    float.fromhex("0x1.04452091e02f0p-6"),
    float.fromhex("0x1.e9bfdde89c7cep-7"),
    float.fromhex("0x1.cb6b9146e2757p-7"),
    float.fromhex("0x1.ad8fa5542c92dp-7"),
    float.fromhex("0x1.902ea688fa7bdp-7"),
    float.fromhex("0x1.734b6e6aa74f5p-7"),
    float.fromhex("0x1.56e930be416cbp-7"),
    float.fromhex("0x1.3b0b8c1516f62p-7"),
    float.fromhex("0x1.1fb69edb37671p-7"),
    float.fromhex("0x1.04ef2295fd7f9p-7"),
    float.fromhex("0x1.d5751fa745dc5p-8"),
    float.fromhex("0x1.a23e9d4974836p-8"),
    float.fromhex("0x1.7049f37ec3620p-8"),
    float.fromhex("0x1.3fa97cee322fdp-8"),
    float.fromhex("0x1.1073d69574043p-8"),
    float.fromhex("0x1.c58b381cd4b11p-9"),
    float.fromhex("0x1.6d888f3a1feffp-9"),
    float.fromhex("0x1.1946ba8e1a324p-9"),
    float.fromhex("0x1.92bb5540c3e25p-10"),
    float.fromhex("0x1.fb20af78dfcb9p-11"),
    float.fromhex("0x1.dc31c329f0b4bp-12"),
)

KI_F = (
    7838188,
    0,
    6309365,
    7150248,
    7507892,
    7705263,
    7830108,
    7916088,
    7978859,
    8026677,
    8064303,
    8094676,
    8119703,
    8140680,
    8158515,
    8173862,
    8187208,
    8198920,
    8209279,
    8218507,
    8226779,
    8234236,
    8240993,
    8247143,
    8252765,
    8257923,
    8262673,
    8267060,
    8271125,
    8274901,
    8278419,
    8281703,
    8284777,
    8287658,
    8290366,
    8292914,
    8295317,
    8297586,
    8299733,
    8301766,
    8303694,
    8305525,
    8307267,
    8308924,
    8310504,
    8312012,
    8313451,
    8314827,
    8316143,
    8317404,
    8318612,
    8319771,
    8320884,
    8321952,
    8322979,
    8323967,
    8324918,
    8325834,
    8326716,
    8327567,
    8328388,
    8329180,
    8329946,
    8330685,
    8331399,
    8332090,
    8332759,
    8333405,
    8334032,
    8334638,
    8335226,
    8335795,
    8336348,
    8336883,
    8337403,
    8337907,
    8338396,
    8338871,
    8339332,
    8339781,
    8340216,
    8340639,
    8341050,
    8341450,
    8341838,
    8342216,
    8342584,
    8342941,
    8343289,
    8343628,
    8343957,
    8344277,
    8344589,
    8344893,
    8345188,
    8345476,
    8345756,
    8346028,
    8346293,
    8346552,
    8346803,
    8347048,
    8347286,
    8347518,
    8347743,
    8347963,
    8348176,
    8348384,
    8348586,
    8348783,
    8348974,
    8349160,
    8349340,
    8349516,
    8349686,
    8349852,
    8350012,
    8350169,
    8350320,
    8350467,
    8350609,
    8350747,
    8350880,
    8351009,
    8351134,
    8351255,
    8351372,
    8351484,
    8351592,
    8351697,
    8351797,
    8351894,
    8351987,
    8352076,
    8352161,
    8352242,
    8352319,
    8352393,
    8352463,
    8352530,
    8352592,
    8352651,
    8352707,
    8352758,
    8352807,
    8352851,
    8352892,
    8352929,
    8352963,
    8352992,
    8353019,
    8353041,
    8353060,
    8353075,
    8353087,
    8353094,
    8353098,
    8353099,
    8353095,
    8353087,
    8353076,
    8353060,
    8353041,
    8353017,
    8352990,
    8352958,
    8352922,
    8352882,
    8352837,
    8352788,
    8352735,
    8352677,
    8352614,
    8352547,
    8352474,
    8352397,
    8352314,
    8352227,
    8352134,
    8352035,
    8351931,
    8351821,
    8351705,
    8351583,
    8351455,
    8351320,
    8351179,
    8351031,
    8350876,
    8350713,
    8350543,
    8350364,
    8350178,
    8349983,
    8349780,
    8349567,
    8349345,
    8349112,
    8348870,
    8348616,
    8348352,
    8348075,
    8347786,
    8347485,
    8347169,
    8346840,
    8346495,
    8346135,
    8345758,
    8345363,
    8344949,
    8344516,
    8344062,
    8343586,
    8343087,
    8342562,
    8342010,
    8341430,
    8340819,
    8340175,
    8339496,
    8338778,
    8338020,
    8337217,
    8336365,
    8335461,
    8334500,
    8333476,
    8332383,
    8331214,
    8329962,
    8328617,
    8327168,
    8325604,
    8323910,
    8322070,
    8320062,
    8317864,
    8315447,
    8312776,
    8309807,
    8306487,
    8302749,
    8298506,
    8293645,
    8288016,
    8281415,
    8273555,
    8264025,
    8252204,
    8237110,
    8217091,
    8189113,
    8146898,
    8074800,
    7918290,
)

WI_F = (
    float.fromhex("0x1.f493b80000000p-22"),
    float.fromhex("0x1.b8d0be0000000p-26"),
    float.fromhex("0x1.250af40000000p-25"),
    float.fromhex("0x1.57cb940000000p-25"),
    float.fromhex("0x1.801fce0000000p-25"),
    float.fromhex("0x1.a230c20000000p-25"),
    float.fromhex("0x1.c004d20000000p-25"),
    float.fromhex("0x1.dac2f60000000p-25"),
    float.fromhex("0x1.f324820000000p-25"),
    float.fromhex("0x1.04d3220000000p-24"),
    float.fromhex("0x1.0f50540000000p-24"),
    float.fromhex("0x1.192a6a0000000p-24"),
    float.fromhex("0x1.227a280000000p-24"),
    float.fromhex("0x1.2b52e40000000p-24"),
    float.fromhex("0x1.33c3fc0000000p-24"),
    float.fromhex("0x1.3bd9ec0000000p-24"),
    float.fromhex("0x1.439ef80000000p-24"),
    float.fromhex("0x1.4b1bb40000000p-24"),
    float.fromhex("0x1.5257560000000p-24"),
    float.fromhex("0x1.59580a0000000p-24"),
    float.fromhex("0x1.60231c0000000p-24"),
    float.fromhex("0x1.66bd260000000p-24"),
    float.fromhex("0x1.6d2a2a0000000p-24"),
    float.fromhex("0x1.736dae0000000p-24"),
    float.fromhex("0x1.798ad20000000p-24"),
    float.fromhex("0x1.7f845a0000000p-24"),
    float.fromhex("0x1.855cc60000000p-24"),
    float.fromhex("0x1.8b164a0000000p-24"),
    float.fromhex("0x1.90b2ea0000000p-24"),
    float.fromhex("0x1.9634780000000p-24"),
    float.fromhex("0x1.9b9c980000000p-24"),
    float.fromhex("0x1.a0ecce0000000p-24"),
    float.fromhex("0x1.a626760000000p-24"),
    float.fromhex("0x1.ab4ad60000000p-24"),
    float.fromhex("0x1.b05b160000000p-24"),
    float.fromhex("0x1.b558480000000p-24"),
    float.fromhex("0x1.ba43680000000p-24"),
    float.fromhex("0x1.bf1d620000000p-24"),
    float.fromhex("0x1.c3e7100000000p-24"),
    float.fromhex("0x1.c8a13a0000000p-24"),
    float.fromhex("0x1.cd4ca00000000p-24"),
    float.fromhex("0x1.d1e9f00000000p-24"),
    float.fromhex("0x1.d679d20000000p-24"),
    float.fromhex("0x1.dafce00000000p-24"),
    float.fromhex("0x1.df73aa0000000p-24"),
    float.fromhex("0x1.e3debc0000000p-24"),
    float.fromhex("0x1.e83e940000000p-24"),
    float.fromhex("0x1.ec93ac0000000p-24"),
    float.fromhex("0x1.f0de780000000p-24"),
    float.fromhex("0x1.f51f660000000p-24"),
    float.fromhex("0x1.f956da0000000p-24"),
    float.fromhex("0x1.fd85380000000p-24"),
    float.fromhex("0x1.00d56e0000000p-23"),
    float.fromhex("0x1.02e4100000000p-23"),
    float.fromhex("0x1.04eeaa0000000p-23"),
    float.fromhex("0x1.06f5660000000p-23"),
    float.fromhex("0x1.08f86a0000000p-23"),
    float.fromhex("0x1.0af7d80000000p-23"),
    float.fromhex("0x1.0cf3d60000000p-23"),
    float.fromhex("0x1.0eec840000000p-23"),
    float.fromhex("0x1.10e2040000000p-23"),
    float.fromhex("0x1.12d4700000000p-23"),
    float.fromhex("0x1.14c3ea0000000p-23"),
    float.fromhex("0x1.16b08c0000000p-23"),
    float.fromhex("0x1.189a720000000p-23"),
    float.fromhex("0x1.1a81b60000000p-23"),
    float.fromhex("0x1.1c66700000000p-23"),
    float.fromhex("0x1.1e48ba0000000p-23"),
    float.fromhex("0x1.2028aa0000000p-23"),
    float.fromhex("0x1.2206580000000p-23"),
    float.fromhex("0x1.23e1d80000000p-23"),
    float.fromhex("0x1.25bb400000000p-23"),
    float.fromhex("0x1.2792a60000000p-23"),
    float.fromhex("0x1.29681c0000000p-23"),
    float.fromhex("0x1.2b3bb60000000p-23"),
    float.fromhex("0x1.2d0d860000000p-23"),
    float.fromhex("0x1.2edd9e0000000p-23"),
    float.fromhex("0x1.30ac100000000p-23"),
    float.fromhex("0x1.3278ee0000000p-23"),
    float.fromhex("0x1.3444480000000p-23"),
    float.fromhex("0x1.360e2c0000000p-23"),
    float.fromhex("0x1.37d6ac0000000p-23"),
    float.fromhex("0x1.399dd60000000p-23"),
    float.fromhex("0x1.3b63bc0000000p-23"),
    float.fromhex("0x1.3d286a0000000p-23"),
    float.fromhex("0x1.3eebee0000000p-23"),
    float.fromhex("0x1.40ae580000000p-23"),
    float.fromhex("0x1.426fb20000000p-23"),
    float.fromhex("0x1.44300e0000000p-23"),
    float.fromhex("0x1.45ef780000000p-23"),
    float.fromhex("0x1.47adfa0000000p-23"),
    float.fromhex("0x1.496ba40000000p-23"),
    float.fromhex("0x1.4b28800000000p-23"),
    float.fromhex("0x1.4ce49a0000000p-23"),
    float.fromhex("0x1.4ea0020000000p-23"),
    float.fromhex("0x1.505abe0000000p-23"),
    float.fromhex("0x1.5214e00000000p-23"),
    float.fromhex("0x1.53ce6e0000000p-23"),
    float.fromhex("0x1.5587740000000p-23"),
    float.fromhex("0x1.5740000000000p-23"),
    float.fromhex("0x1.58f81c0000000p-23"),
    float.fromhex("0x1.5aafd20000000p-23"),
    float.fromhex("0x1.5c672e0000000p-23"),
    float.fromhex("0x1.5e1e380000000p-23"),
    float.fromhex("0x1.5fd4fc0000000p-23"),
    float.fromhex("0x1.618b860000000p-23"),
    float.fromhex("0x1.6341de0000000p-23"),
    float.fromhex("0x1.64f8100000000p-23"),
    float.fromhex("0x1.66ae260000000p-23"),
    float.fromhex("0x1.6864280000000p-23"),
    float.fromhex("0x1.6a1a220000000p-23"),
    float.fromhex("0x1.6bd01e0000000p-23"),
    float.fromhex("0x1.6d86260000000p-23"),
    float.fromhex("0x1.6f3c440000000p-23"),
    float.fromhex("0x1.70f2800000000p-23"),
    float.fromhex("0x1.72a8e60000000p-23"),
    float.fromhex("0x1.745f7e0000000p-23"),
    float.fromhex("0x1.7616540000000p-23"),
    float.fromhex("0x1.77cd700000000p-23"),
    float.fromhex("0x1.7984dc0000000p-23"),
    float.fromhex("0x1.7b3ca40000000p-23"),
    float.fromhex("0x1.7cf4d00000000p-23"),
    float.fromhex("0x1.7ead680000000p-23"),
    float.fromhex("0x1.80667a0000000p-23"),
    float.fromhex("0x1.82200e0000000p-23"),
    float.fromhex("0x1.83da2c0000000p-23"),
    float.fromhex("0x1.8594e20000000p-23"),
    float.fromhex("0x1.8750360000000p-23"),
    float.fromhex("0x1.890c360000000p-23"),
    float.fromhex("0x1.8ac8ea0000000p-23"),
    float.fromhex("0x1.8c865a0000000p-23"),
    float.fromhex("0x1.8e44960000000p-23"),
    float.fromhex("0x1.9003a20000000p-23"),
    float.fromhex("0x1.91c38e0000000p-23"),
    float.fromhex("0x1.9384620000000p-23"),
    float.fromhex("0x1.9546280000000p-23"),
    float.fromhex("0x1.9708ec0000000p-23"),
    float.fromhex("0x1.98ccb80000000p-23"),
    float.fromhex("0x1.9a919a0000000p-23"),
    float.fromhex("0x1.9c57980000000p-23"),
    float.fromhex("0x1.9e1ec20000000p-23"),
    float.fromhex("0x1.9fe7220000000p-23"),
    float.fromhex("0x1.a1b0c40000000p-23"),
    float.fromhex("0x1.a37bb20000000p-23"),
    float.fromhex("0x1.a547fa0000000p-23"),
    float.fromhex("0x1.a715a80000000p-23"),
    float.fromhex("0x1.a8e4c60000000p-23"),
    float.fromhex("0x1.aab5640000000p-23"),
    float.fromhex("0x1.ac878c0000000p-23"),
    float.fromhex("0x1.ae5b4e0000000p-23"),
    float.fromhex("0x1.b030b40000000p-23"),
    float.fromhex("0x1.b207d00000000p-23"),
    float.fromhex("0x1.b3e0aa0000000p-23"),
    float.fromhex("0x1.b5bb540000000p-23"),
    float.fromhex("0x1.b797dc0000000p-23"),
    float.fromhex("0x1.b976500000000p-23"),
    float.fromhex("0x1.bb56be0000000p-23"),
    float.fromhex("0x1.bd39360000000p-23"),
    float.fromhex("0x1.bf1dca0000000p-23"),
    float.fromhex("0x1.c104860000000p-23"),
    float.fromhex("0x1.c2ed7e0000000p-23"),
    float.fromhex("0x1.c4d8c20000000p-23"),
    float.fromhex("0x1.c6c6600000000p-23"),
    float.fromhex("0x1.c8b66e0000000p-23"),
    float.fromhex("0x1.caa8fc0000000p-23"),
    float.fromhex("0x1.cc9e1c0000000p-23"),
    float.fromhex("0x1.ce95e40000000p-23"),
    float.fromhex("0x1.d090640000000p-23"),
    float.fromhex("0x1.d28db20000000p-23"),
    float.fromhex("0x1.d48de20000000p-23"),
    float.fromhex("0x1.d6910a0000000p-23"),
    float.fromhex("0x1.d897400000000p-23"),
    float.fromhex("0x1.daa09a0000000p-23"),
    float.fromhex("0x1.dcad300000000p-23"),
    float.fromhex("0x1.debd1a0000000p-23"),
    float.fromhex("0x1.e0d0700000000p-23"),
    float.fromhex("0x1.e2e74c0000000p-23"),
    float.fromhex("0x1.e501ca0000000p-23"),
    float.fromhex("0x1.e720020000000p-23"),
    float.fromhex("0x1.e942140000000p-23"),
    float.fromhex("0x1.eb681c0000000p-23"),
    float.fromhex("0x1.ed92380000000p-23"),
    float.fromhex("0x1.efc0860000000p-23"),
    float.fromhex("0x1.f1f3280000000p-23"),
    float.fromhex("0x1.f42a400000000p-23"),
    float.fromhex("0x1.f665f20000000p-23"),
    float.fromhex("0x1.f8a6600000000p-23"),
    float.fromhex("0x1.faebb20000000p-23"),
    float.fromhex("0x1.fd360e0000000p-23"),
    float.fromhex("0x1.ff859c0000000p-23"),
    float.fromhex("0x1.00ed440000000p-22"),
    float.fromhex("0x1.021a800000000p-22"),
    float.fromhex("0x1.034a980000000p-22"),
    float.fromhex("0x1.047da40000000p-22"),
    float.fromhex("0x1.05b3c00000000p-22"),
    float.fromhex("0x1.06ed020000000p-22"),
    float.fromhex("0x1.0829880000000p-22"),
    float.fromhex("0x1.0969700000000p-22"),
    float.fromhex("0x1.0aacd80000000p-22"),
    float.fromhex("0x1.0bf3de0000000p-22"),
    float.fromhex("0x1.0d3ea40000000p-22"),
    float.fromhex("0x1.0e8d4c0000000p-22"),
    float.fromhex("0x1.0fdffe0000000p-22"),
    float.fromhex("0x1.1136e00000000p-22"),
    float.fromhex("0x1.12921a0000000p-22"),
    float.fromhex("0x1.13f1d60000000p-22"),
    float.fromhex("0x1.1556440000000p-22"),
    float.fromhex("0x1.16bf940000000p-22"),
    float.fromhex("0x1.182df80000000p-22"),
    float.fromhex("0x1.19a1a60000000p-22"),
    float.fromhex("0x1.1b1ad80000000p-22"),
    float.fromhex("0x1.1c99ca0000000p-22"),
    float.fromhex("0x1.1e1ec00000000p-22"),
    float.fromhex("0x1.1fa9fc0000000p-22"),
    float.fromhex("0x1.213bca0000000p-22"),
    float.fromhex("0x1.22d4780000000p-22"),
    float.fromhex("0x1.24745a0000000p-22"),
    float.fromhex("0x1.261bcc0000000p-22"),
    float.fromhex("0x1.27cb300000000p-22"),
    float.fromhex("0x1.2982ec0000000p-22"),
    float.fromhex("0x1.2b43760000000p-22"),
    float.fromhex("0x1.2d0d440000000p-22"),
    float.fromhex("0x1.2ee0dc0000000p-22"),
    float.fromhex("0x1.30bece0000000p-22"),
    float.fromhex("0x1.32a7b60000000p-22"),
    float.fromhex("0x1.349c400000000p-22"),
    float.fromhex("0x1.369d280000000p-22"),
    float.fromhex("0x1.38ab3a0000000p-22"),
    float.fromhex("0x1.3ac7580000000p-22"),
    float.fromhex("0x1.3cf27c0000000p-22"),
    float.fromhex("0x1.3f2dba0000000p-22"),
    float.fromhex("0x1.417a4a0000000p-22"),
    float.fromhex("0x1.43d9820000000p-22"),
    float.fromhex("0x1.464ce40000000p-22"),
    float.fromhex("0x1.48d6280000000p-22"),
    float.fromhex("0x1.4b773a0000000p-22"),
    float.fromhex("0x1.4e32500000000p-22"),
    float.fromhex("0x1.5109f60000000p-22"),
    float.fromhex("0x1.5401160000000p-22"),
    float.fromhex("0x1.571b1a0000000p-22"),
    float.fromhex("0x1.5a5c080000000p-22"),
    float.fromhex("0x1.5dc8a20000000p-22"),
    float.fromhex("0x1.61669c0000000p-22"),
    float.fromhex("0x1.653ce80000000p-22"),
    float.fromhex("0x1.69540c0000000p-22"),
    float.fromhex("0x1.6db6b80000000p-22"),
    float.fromhex("0x1.7272900000000p-22"),
    float.fromhex("0x1.7799560000000p-22"),
    float.fromhex("0x1.7d42e00000000p-22"),
    float.fromhex("0x1.8390300000000p-22"),
    float.fromhex("0x1.8ab0fc0000000p-22"),
    float.fromhex("0x1.92ee0a0000000p-22"),
    float.fromhex("0x1.9cbee00000000p-22"),
    float.fromhex("0x1.a8fdc80000000p-22"),
    float.fromhex("0x1.b981f40000000p-22"),
    float.fromhex("0x1.d3bb480000000p-22"),
)

FI_F = (
    float.fromhex("0x1.0000000000000p+0"),
    float.fromhex("0x1.f446ac0000000p-1"),
    float.fromhex("0x1.eb75460000000p-1"),
    float.fromhex("0x1.e3f11e0000000p-1"),
    float.fromhex("0x1.dd36fa0000000p-1"),
    float.fromhex("0x1.d709200000000p-1"),
    float.fromhex("0x1.d144980000000p-1"),
    float.fromhex("0x1.cbd33a0000000p-1"),
    float.fromhex("0x1.c6a5ec0000000p-1"),
    float.fromhex("0x1.c1b1ce0000000p-1"),
    float.fromhex("0x1.bceeb40000000p-1"),
    float.fromhex("0x1.b856540000000p-1"),
    float.fromhex("0x1.b3e3a80000000p-1"),
    float.fromhex("0x1.af92a40000000p-1"),
    float.fromhex("0x1.ab5ff00000000p-1"),
    float.fromhex("0x1.a748be0000000p-1"),
    float.fromhex("0x1.a34ab00000000p-1"),
    float.fromhex("0x1.9f63be0000000p-1"),
    float.fromhex("0x1.9b92280000000p-1"),
    float.fromhex("0x1.97d4660000000p-1"),
    float.fromhex("0x1.94291c0000000p-1"),
    float.fromhex("0x1.908f1c0000000p-1"),
    float.fromhex("0x1.8d05540000000p-1"),
    float.fromhex("0x1.898ad40000000p-1"),
    float.fromhex("0x1.861ec00000000p-1"),
    float.fromhex("0x1.82c0500000000p-1"),
    float.fromhex("0x1.7f6ed40000000p-1"),
    float.fromhex("0x1.7c29a80000000p-1"),
    float.fromhex("0x1.78f0340000000p-1"),
    float.fromhex("0x1.75c1f00000000p-1"),
    float.fromhex("0x1.729e600000000p-1"),
    float.fromhex("0x1.6f850c0000000p-1"),
    float.fromhex("0x1.6c758a0000000p-1"),
    float.fromhex("0x1.696f760000000p-1"),
    float.fromhex("0x1.6672720000000p-1"),
    float.fromhex("0x1.637e2a0000000p-1"),
    float.fromhex("0x1.60924a0000000p-1"),
    float.fromhex("0x1.5dae860000000p-1"),
    float.fromhex("0x1.5ad29a0000000p-1"),
    float.fromhex("0x1.57fe420000000p-1"),
    float.fromhex("0x1.5531400000000p-1"),
    float.fromhex("0x1.526b560000000p-1"),
    float.fromhex("0x1.4fac4e0000000p-1"),
    float.fromhex("0x1.4cf3f40000000p-1"),
    float.fromhex("0x1.4a42180000000p-1"),
    float.fromhex("0x1.4796860000000p-1"),
    float.fromhex("0x1.44f1140000000p-1"),
    float.fromhex("0x1.4251980000000p-1"),
    float.fromhex("0x1.3fb7ea0000000p-1"),
    float.fromhex("0x1.3d23e20000000p-1"),
    float.fromhex("0x1.3a955a0000000p-1"),
    float.fromhex("0x1.380c320000000p-1"),
    float.fromhex("0x1.3588480000000p-1"),
    float.fromhex("0x1.33097c0000000p-1"),
    float.fromhex("0x1.308fb00000000p-1"),
    float.fromhex("0x1.2e1ac60000000p-1"),
    float.fromhex("0x1.2baaa20000000p-1"),
    float.fromhex("0x1.293f280000000p-1"),
    float.fromhex("0x1.26d8420000000p-1"),
    float.fromhex("0x1.2475d60000000p-1"),
    float.fromhex("0x1.2217ca0000000p-1"),
    float.fromhex("0x1.1fbe0a0000000p-1"),
    float.fromhex("0x1.1d68800000000p-1"),
    float.fromhex("0x1.1b17160000000p-1"),
    float.fromhex("0x1.18c9b80000000p-1"),
    float.fromhex("0x1.1680520000000p-1"),
    float.fromhex("0x1.143ad20000000p-1"),
    float.fromhex("0x1.11f9240000000p-1"),
    float.fromhex("0x1.0fbb3a0000000p-1"),
    float.fromhex("0x1.0d81020000000p-1"),
    float.fromhex("0x1.0b4a680000000p-1"),
    float.fromhex("0x1.0917620000000p-1"),
    float.fromhex("0x1.06e7dc0000000p-1"),
    float.fromhex("0x1.04bbca0000000p-1"),
    float.fromhex("0x1.02931e0000000p-1"),
    float.fromhex("0x1.006dc80000000p-1"),
    float.fromhex("0x1.fc97780000000p-2"),
    float.fromhex("0x1.f859da0000000p-2"),
    float.fromhex("0x1.f4229c0000000p-2"),
    float.fromhex("0x1.eff1a80000000p-2"),
    float.fromhex("0x1.ebc6e20000000p-2"),
    float.fromhex("0x1.e7a2360000000p-2"),
    float.fromhex("0x1.e3838e0000000p-2"),
    float.fromhex("0x1.df6ad40000000p-2"),
    float.fromhex("0x1.db57f40000000p-2"),
    float.fromhex("0x1.d74ad60000000p-2"),
    float.fromhex("0x1.d3436a0000000p-2"),
    float.fromhex("0x1.cf419c0000000p-2"),
    float.fromhex("0x1.cb45580000000p-2"),
    float.fromhex("0x1.c74e8c0000000p-2"),
    float.fromhex("0x1.c35d260000000p-2"),
    float.fromhex("0x1.bf71180000000p-2"),
    float.fromhex("0x1.bb8a4e0000000p-2"),
    float.fromhex("0x1.b7a8b80000000p-2"),
    float.fromhex("0x1.b3cc460000000p-2"),
    float.fromhex("0x1.aff4ea0000000p-2"),
    float.fromhex("0x1.ac22940000000p-2"),
    float.fromhex("0x1.a855340000000p-2"),
    float.fromhex("0x1.a48cbe0000000p-2"),
    float.fromhex("0x1.a0c9240000000p-2"),
    float.fromhex("0x1.9d0a560000000p-2"),
    float.fromhex("0x1.9950480000000p-2"),
    float.fromhex("0x1.959aee0000000p-2"),
    float.fromhex("0x1.91ea3a0000000p-2"),
    float.fromhex("0x1.8e3e200000000p-2"),
    float.fromhex("0x1.8a96940000000p-2"),
    float.fromhex("0x1.86f38a0000000p-2"),
    float.fromhex("0x1.8354f80000000p-2"),
    float.fromhex("0x1.7fbad20000000p-2"),
    float.fromhex("0x1.7c250a0000000p-2"),
    float.fromhex("0x1.78939a0000000p-2"),
    float.fromhex("0x1.7506760000000p-2"),
    float.fromhex("0x1.717d940000000p-2"),
    float.fromhex("0x1.6df8e80000000p-2"),
    float.fromhex("0x1.6a786a0000000p-2"),
    float.fromhex("0x1.66fc120000000p-2"),
    float.fromhex("0x1.6383d40000000p-2"),
    float.fromhex("0x1.600fa80000000p-2"),
    float.fromhex("0x1.5c9f840000000p-2"),
    float.fromhex("0x1.5933620000000p-2"),
    float.fromhex("0x1.55cb380000000p-2"),
    float.fromhex("0x1.5266fc0000000p-2"),
    float.fromhex("0x1.4f06a80000000p-2"),
    float.fromhex("0x1.4baa360000000p-2"),
    float.fromhex("0x1.48519a0000000p-2"),
    float.fromhex("0x1.44fcce0000000p-2"),
    float.fromhex("0x1.41abce0000000p-2"),
    float.fromhex("0x1.3e5e8e0000000p-2"),
    float.fromhex("0x1.3b15080000000p-2"),
    float.fromhex("0x1.37cf360000000p-2"),
    float.fromhex("0x1.348d120000000p-2"),
    float.fromhex("0x1.314e940000000p-2"),
    float.fromhex("0x1.2e13b80000000p-2"),
    float.fromhex("0x1.2adc740000000p-2"),
    float.fromhex("0x1.27a8c40000000p-2"),
    float.fromhex("0x1.2478a20000000p-2"),
    float.fromhex("0x1.214c080000000p-2"),
    float.fromhex("0x1.1e22f00000000p-2"),
    float.fromhex("0x1.1afd540000000p-2"),
    float.fromhex("0x1.17db2e0000000p-2"),
    float.fromhex("0x1.14bc7c0000000p-2"),
    float.fromhex("0x1.11a1340000000p-2"),
    float.fromhex("0x1.0e89560000000p-2"),
    float.fromhex("0x1.0b74d80000000p-2"),
    float.fromhex("0x1.0863b80000000p-2"),
    float.fromhex("0x1.0555f20000000p-2"),
    float.fromhex("0x1.024b800000000p-2"),
    float.fromhex("0x1.fe88b80000000p-3"),
    float.fromhex("0x1.f881080000000p-3"),
    float.fromhex("0x1.f27fe60000000p-3"),
    float.fromhex("0x1.ec854a0000000p-3"),
    float.fromhex("0x1.e6912c0000000p-3"),
    float.fromhex("0x1.e0a3820000000p-3"),
    float.fromhex("0x1.dabc460000000p-3"),
    float.fromhex("0x1.d4db700000000p-3"),
    float.fromhex("0x1.cf00f80000000p-3"),
    float.fromhex("0x1.c92cda0000000p-3"),
    float.fromhex("0x1.c35f0c0000000p-3"),
    float.fromhex("0x1.bd97880000000p-3"),
    float.fromhex("0x1.b7d6480000000p-3"),
    float.fromhex("0x1.b21b460000000p-3"),
    float.fromhex("0x1.ac667a0000000p-3"),
    float.fromhex("0x1.a6b7e00000000p-3"),
    float.fromhex("0x1.a10f740000000p-3"),
    float.fromhex("0x1.9b6d2c0000000p-3"),
    float.fromhex("0x1.95d1060000000p-3"),
    float.fromhex("0x1.903afc0000000p-3"),
    float.fromhex("0x1.8aab0a0000000p-3"),
    float.fromhex("0x1.8521280000000p-3"),
    float.fromhex("0x1.7f9d560000000p-3"),
    float.fromhex("0x1.7a1f8e0000000p-3"),
    float.fromhex("0x1.74a7ca0000000p-3"),
    float.fromhex("0x1.6f36080000000p-3"),
    float.fromhex("0x1.69ca440000000p-3"),
    float.fromhex("0x1.64647a0000000p-3"),
    float.fromhex("0x1.5f04a80000000p-3"),
    float.fromhex("0x1.59aac80000000p-3"),
    float.fromhex("0x1.5456da0000000p-3"),
    float.fromhex("0x1.4f08da0000000p-3"),
    float.fromhex("0x1.49c0c60000000p-3"),
    float.fromhex("0x1.447e9c0000000p-3"),
    float.fromhex("0x1.3f42580000000p-3"),
    float.fromhex("0x1.3a0bfa0000000p-3"),
    float.fromhex("0x1.34db800000000p-3"),
    float.fromhex("0x1.2fb0e80000000p-3"),
    float.fromhex("0x1.2a8c320000000p-3"),
    float.fromhex("0x1.256d5a0000000p-3"),
    float.fromhex("0x1.2054620000000p-3"),
    float.fromhex("0x1.1b414a0000000p-3"),
    float.fromhex("0x1.16340e0000000p-3"),
    float.fromhex("0x1.112cb20000000p-3"),
    float.fromhex("0x1.0c2b340000000p-3"),
    float.fromhex("0x1.072f940000000p-3"),
    float.fromhex("0x1.0239d60000000p-3"),
    float.fromhex("0x1.fa93ec0000000p-4"),
    float.fromhex("0x1.f0bff20000000p-4"),
    float.fromhex("0x1.e6f7c00000000p-4"),
    float.fromhex("0x1.dd3b560000000p-4"),
    float.fromhex("0x1.d38abc0000000p-4"),
    float.fromhex("0x1.c9e5f40000000p-4"),
    float.fromhex("0x1.c04d060000000p-4"),
    float.fromhex("0x1.b6bff80000000p-4"),
    float.fromhex("0x1.ad3ece0000000p-4"),
    float.fromhex("0x1.a3c9940000000p-4"),
    float.fromhex("0x1.9a604e0000000p-4"),
    float.fromhex("0x1.9103080000000p-4"),
    float.fromhex("0x1.87b1ca0000000p-4"),
    float.fromhex("0x1.7e6ca00000000p-4"),
    float.fromhex("0x1.7533960000000p-4"),
    float.fromhex("0x1.6c06b80000000p-4"),
    float.fromhex("0x1.62e6120000000p-4"),
    float.fromhex("0x1.59d1b60000000p-4"),
    float.fromhex("0x1.50c9b00000000p-4"),
    float.fromhex("0x1.47ce140000000p-4"),
    float.fromhex("0x1.3edef20000000p-4"),
    float.fromhex("0x1.35fc5e0000000p-4"),
    float.fromhex("0x1.2d266c0000000p-4"),
    float.fromhex("0x1.245d340000000p-4"),
    float.fromhex("0x1.1ba0cc0000000p-4"),
    float.fromhex("0x1.12f14e0000000p-4"),
    float.fromhex("0x1.0a4ed20000000p-4"),
    float.fromhex("0x1.01b97a0000000p-4"),
    float.fromhex("0x1.f262c20000000p-5"),
    float.fromhex("0x1.e16d540000000p-5"),
    float.fromhex("0x1.d092f00000000p-5"),
    float.fromhex("0x1.bfd3e00000000p-5"),
    float.fromhex("0x1.af307a0000000p-5"),
    float.fromhex("0x1.9ea9100000000p-5"),
    float.fromhex("0x1.8e3e020000000p-5"),
    float.fromhex("0x1.7defb80000000p-5"),
    float.fromhex("0x1.6dbe9c0000000p-5"),
    float.fromhex("0x1.5dab240000000p-5"),
    float.fromhex("0x1.4db5d00000000p-5"),
    float.fromhex("0x1.3ddf2c0000000p-5"),
    float.fromhex("0x1.2e27ce0000000p-5"),
    float.fromhex("0x1.1e905a0000000p-5"),
    float.fromhex("0x1.0f19820000000p-5"),
    float.fromhex("0x1.ff881e0000000p-6"),
    float.fromhex("0x1.e121ae0000000p-6"),
    float.fromhex("0x1.c301980000000p-6"),
    float.fromhex("0x1.a529f40000000p-6"),
    float.fromhex("0x1.879d1c0000000p-6"),
    float.fromhex("0x1.6a5db00000000p-6"),
    float.fromhex("0x1.4d6eb00000000p-6"),
    float.fromhex("0x1.30d3880000000p-6"),
    float.fromhex("0x1.1490340000000p-6"),
    float.fromhex("0x1.f152a40000000p-7"),
    float.fromhex("0x1.ba48d20000000p-7"),
    float.fromhex("0x1.8410400000000p-7"),
    float.fromhex("0x1.4eb9640000000p-7"),
    float.fromhex("0x1.1a59220000000p-7"),
    float.fromhex("0x1.ce16100000000p-8"),
    float.fromhex("0x1.69ea8e0000000p-8"),
    float.fromhex("0x1.08a1f00000000p-8"),
    float.fromhex("0x1.55f9f40000000p-9"),
    float.fromhex("0x1.4a605c0000000p-10"),
)

KE_F = (
    14848162,
    0,
    10218206,
    12810156,
    13950394,
    14584128,
    14985448,
    15261682,
    15463134,
    15616422,
    15736910,
    15834076,
    15914072,
    15981072,
    16037998,
    16086958,
    16129512,
    16166840,
    16199846,
    16229238,
    16255580,
    16279320,
    16300828,
    16320400,
    16338288,
    16354700,
    16369810,
    16383768,
    16396698,
    16408710,
    16419898,
    16430344,
    16440118,
    16449284,
    16457894,
    16466000,
    16473642,
    16480858,
    16487684,
    16494148,
    16500280,
    16506104,
    16511642,
    16516914,
    16521938,
    16526732,
    16531308,
    16535684,
    16539870,
    16543878,
    16547720,
    16551404,
    16554942,
    16558338,
    16561604,
    16564744,
    16567768,
    16570678,
    16573482,
    16576186,
    16578796,
    16581312,
    16583744,
    16586092,
    16588360,
    16590554,
    16592678,
    16594730,
    16596718,
    16598644,
    16600508,
    16602316,
    16604066,
    16605766,
    16607412,
    16609010,
    16610560,
    16612066,
    16613526,
    16614944,
    16616322,
    16617660,
    16618962,
    16620226,
    16621454,
    16622648,
    16623808,
    16624936,
    16626034,
    16627100,
    16628138,
    16629148,
    16630128,
    16631084,
    16632012,
    16632916,
    16633796,
    16634650,
    16635482,
    16636290,
    16637076,
    16637842,
    16638586,
    16639310,
    16640012,
    16640696,
    16641360,
    16642006,
    16642632,
    16643242,
    16643834,
    16644408,
    16644964,
    16645506,
    16646030,
    16646538,
    16647030,
    16647508,
    16647970,
    16648416,
    16648848,
    16649264,
    16649668,
    16650056,
    16650432,
    16650792,
    16651140,
    16651474,
    16651794,
    16652102,
    16652396,
    16652676,
    16652944,
    16653200,
    16653442,
    16653672,
    16653890,
    16654096,
    16654288,
    16654468,
    16654636,
    16654792,
    16654934,
    16655066,
    16655184,
    16655290,
    16655384,
    16655466,
    16655536,
    16655592,
    16655636,
    16655668,
    16655688,
    16655694,
    16655688,
    16655670,
    16655638,
    16655592,
    16655534,
    16655462,
    16655378,
    16655280,
    16655166,
    16655040,
    16654900,
    16654744,
    16654574,
    16654390,
    16654190,
    16653974,
    16653742,
    16653496,
    16653232,
    16652952,
    16652654,
    16652338,
    16652006,
    16651654,
    16651284,
    16650894,
    16650486,
    16650056,
    16649604,
    16649132,
    16648638,
    16648120,
    16647578,
    16647012,
    16646422,
    16645804,
    16645158,
    16644486,
    16643784,
    16643052,
    16642288,
    16641492,
    16640662,
    16639796,
    16638892,
    16637950,
    16636968,
    16635942,
    16634874,
    16633758,
    16632594,
    16631378,
    16630108,
    16628780,
    16627394,
    16625944,
    16624426,
    16622838,
    16621174,
    16619430,
    16617602,
    16615682,
    16613666,
    16611546,
    16609314,
    16606964,
    16604488,
    16601872,
    16599108,
    16596182,
    16593082,
    16589790,
    16586292,
    16582568,
    16578594,
    16574346,
    16569794,
    16564906,
    16559646,
    16553966,
    16547814,
    16541132,
    16533848,
    16525872,
    16517102,
    16507412,
    16496646,
    16484608,
    16471058,
    16455680,
    16438068,
    16417682,
    16393788,
    16365358,
    16330914,
    16288240,
    16233848,
    16161894,
    16061744,
    15911694,
    15658930,
    15129198,
)

WE_F = (
    float.fromhex("0x1.164eca0000000p-21"),
    float.fromhex("0x1.0589d80000000p-28"),
    float.fromhex("0x1.ad6b240000000p-28"),
    float.fromhex("0x1.19335a0000000p-27"),
    float.fromhex("0x1.522e6e0000000p-27"),
    float.fromhex("0x1.8509100000000p-27"),
    float.fromhex("0x1.b38d1e0000000p-27"),
    float.fromhex("0x1.decd8c0000000p-27"),
    float.fromhex("0x1.03bf040000000p-26"),
    float.fromhex("0x1.170db20000000p-26"),
    float.fromhex("0x1.29802a0000000p-26"),
    float.fromhex("0x1.3b38900000000p-26"),
    float.fromhex("0x1.4c515c0000000p-26"),
    float.fromhex("0x1.5cdf8a0000000p-26"),
    float.fromhex("0x1.6cf4100000000p-26"),
    float.fromhex("0x1.7c9cde0000000p-26"),
    float.fromhex("0x1.8be5960000000p-26"),
    float.fromhex("0x1.9ad8060000000p-26"),
    float.fromhex("0x1.a97c8c0000000p-26"),
    float.fromhex("0x1.b7da5e0000000p-26"),
    float.fromhex("0x1.c5f7be0000000p-26"),
    float.fromhex("0x1.d3da240000000p-26"),
    float.fromhex("0x1.e186680000000p-26"),
    float.fromhex("0x1.ef00cc0000000p-26"),
    float.fromhex("0x1.fc4d260000000p-26"),
    float.fromhex("0x1.04b76e0000000p-25"),
    float.fromhex("0x1.0b34840000000p-25"),
    float.fromhex("0x1.119f380000000p-25"),
    float.fromhex("0x1.17f8ce0000000p-25"),
    float.fromhex("0x1.1e426e0000000p-25"),
    float.fromhex("0x1.247d260000000p-25"),
    float.fromhex("0x1.2aa9ee0000000p-25"),
    float.fromhex("0x1.30c9aa0000000p-25"),
    float.fromhex("0x1.36dd2e0000000p-25"),
    float.fromhex("0x1.3ce53e0000000p-25"),
    float.fromhex("0x1.42e28c0000000p-25"),
    float.fromhex("0x1.48d5c60000000p-25"),
    float.fromhex("0x1.4ebf860000000p-25"),
    float.fromhex("0x1.54a0620000000p-25"),
    float.fromhex("0x1.5a78e40000000p-25"),
    float.fromhex("0x1.60498c0000000p-25"),
    float.fromhex("0x1.6612d60000000p-25"),
    float.fromhex("0x1.6bd5360000000p-25"),
    float.fromhex("0x1.7191180000000p-25"),
    float.fromhex("0x1.7746e20000000p-25"),
    float.fromhex("0x1.7cf6f80000000p-25"),
    float.fromhex("0x1.82a1b60000000p-25"),
    float.fromhex("0x1.8847720000000p-25"),
    float.fromhex("0x1.8de8860000000p-25"),
    float.fromhex("0x1.93853c0000000p-25"),
    float.fromhex("0x1.991de40000000p-25"),
    float.fromhex("0x1.9eb2c80000000p-25"),
    float.fromhex("0x1.a4442c0000000p-25"),
    float.fromhex("0x1.a9d2560000000p-25"),
    float.fromhex("0x1.af5d840000000p-25"),
    float.fromhex("0x1.b4e5f80000000p-25"),
    float.fromhex("0x1.ba6bec0000000p-25"),
    float.fromhex("0x1.bfef9a0000000p-25"),
    float.fromhex("0x1.c5713a0000000p-25"),
    float.fromhex("0x1.caf1020000000p-25"),
    float.fromhex("0x1.d06f280000000p-25"),
    float.fromhex("0x1.d5ebe00000000p-25"),
    float.fromhex("0x1.db67560000000p-25"),
    float.fromhex("0x1.e0e1c00000000p-25"),
    float.fromhex("0x1.e65b480000000p-25"),
    float.fromhex("0x1.ebd41e0000000p-25"),
    float.fromhex("0x1.f14c6e0000000p-25"),
    float.fromhex("0x1.f6c4620000000p-25"),
    float.fromhex("0x1.fc3c260000000p-25"),
    float.fromhex("0x1.00d9f20000000p-24"),
    float.fromhex("0x1.0395e00000000p-24"),
    float.fromhex("0x1.0651f20000000p-24"),
    float.fromhex("0x1.090e3c0000000p-24"),
    float.fromhex("0x1.0bcad00000000p-24"),
    float.fromhex("0x1.0e87c20000000p-24"),
    float.fromhex("0x1.1145240000000p-24"),
    float.fromhex("0x1.1403060000000p-24"),
    float.fromhex("0x1.16c17e0000000p-24"),
    float.fromhex("0x1.19809a0000000p-24"),
    float.fromhex("0x1.1c406e0000000p-24"),
    float.fromhex("0x1.1f010a0000000p-24"),
    float.fromhex("0x1.21c27e0000000p-24"),
    float.fromhex("0x1.2484dc0000000p-24"),
    float.fromhex("0x1.2748340000000p-24"),
    float.fromhex("0x1.2a0c980000000p-24"),
    float.fromhex("0x1.2cd2160000000p-24"),
    float.fromhex("0x1.2f98c20000000p-24"),
    float.fromhex("0x1.3260a80000000p-24"),
    float.fromhex("0x1.3529da0000000p-24"),
    float.fromhex("0x1.37f46a0000000p-24"),
    float.fromhex("0x1.3ac0640000000p-24"),
    float.fromhex("0x1.3d8ddc0000000p-24"),
    float.fromhex("0x1.405ce00000000p-24"),
    float.fromhex("0x1.432d7e0000000p-24"),
    float.fromhex("0x1.45ffca0000000p-24"),
    float.fromhex("0x1.48d3d00000000p-24"),
    float.fromhex("0x1.4ba9a20000000p-24"),
    float.fromhex("0x1.4e81500000000p-24"),
    float.fromhex("0x1.515ae80000000p-24"),
    float.fromhex("0x1.54367c0000000p-24"),
    float.fromhex("0x1.57141c0000000p-24"),
    float.fromhex("0x1.59f3d60000000p-24"),
    float.fromhex("0x1.5cd5be0000000p-24"),
    float.fromhex("0x1.5fb9e00000000p-24"),
    float.fromhex("0x1.62a04e0000000p-24"),
    float.fromhex("0x1.65891a0000000p-24"),
    float.fromhex("0x1.6874520000000p-24"),
    float.fromhex("0x1.6b62080000000p-24"),
    float.fromhex("0x1.6e524c0000000p-24"),
    float.fromhex("0x1.7145320000000p-24"),
    float.fromhex("0x1.743ac60000000p-24"),
    float.fromhex("0x1.77331e0000000p-24"),
    float.fromhex("0x1.7a2e480000000p-24"),
    float.fromhex("0x1.7d2c560000000p-24"),
    float.fromhex("0x1.802d5c0000000p-24"),
    float.fromhex("0x1.83316c0000000p-24"),
    float.fromhex("0x1.8638960000000p-24"),
    float.fromhex("0x1.8942ec0000000p-24"),
    float.fromhex("0x1.8c50840000000p-24"),
    float.fromhex("0x1.8f61700000000p-24"),
    float.fromhex("0x1.9275c00000000p-24"),
    float.fromhex("0x1.958d8c0000000p-24"),
    float.fromhex("0x1.98a8e40000000p-24"),
    float.fromhex("0x1.9bc7de0000000p-24"),
    float.fromhex("0x1.9eea8e0000000p-24"),
    float.fromhex("0x1.a211080000000p-24"),
    float.fromhex("0x1.a53b640000000p-24"),
    float.fromhex("0x1.a869b40000000p-24"),
    float.fromhex("0x1.ab9c0e0000000p-24"),
    float.fromhex("0x1.aed28a0000000p-24"),
    float.fromhex("0x1.b20d3e0000000p-24"),
    float.fromhex("0x1.b54c400000000p-24"),
    float.fromhex("0x1.b88fa80000000p-24"),
    float.fromhex("0x1.bbd78e0000000p-24"),
    float.fromhex("0x1.bf240a0000000p-24"),
    float.fromhex("0x1.c275340000000p-24"),
    float.fromhex("0x1.c5cb280000000p-24"),
    float.fromhex("0x1.c925fe0000000p-24"),
    float.fromhex("0x1.cc85d00000000p-24"),
    float.fromhex("0x1.cfeab80000000p-24"),
    float.fromhex("0x1.d354d40000000p-24"),
    float.fromhex("0x1.d6c43e0000000p-24"),
    float.fromhex("0x1.da39160000000p-24"),
    float.fromhex("0x1.ddb3740000000p-24"),
    float.fromhex("0x1.e1337c0000000p-24"),
    float.fromhex("0x1.e4b9480000000p-24"),
    float.fromhex("0x1.e844fa0000000p-24"),
    float.fromhex("0x1.ebd6b20000000p-24"),
    float.fromhex("0x1.ef6e900000000p-24"),
    float.fromhex("0x1.f30cb60000000p-24"),
    float.fromhex("0x1.f6b14a0000000p-24"),
    float.fromhex("0x1.fa5c6c0000000p-24"),
    float.fromhex("0x1.fe0e400000000p-24"),
    float.fromhex("0x1.00e3780000000p-23"),
    float.fromhex("0x1.02c34e0000000p-23"),
    float.fromhex("0x1.04a6ba0000000p-23"),
    float.fromhex("0x1.068dcc0000000p-23"),
    float.fromhex("0x1.08789c0000000p-23"),
    float.fromhex("0x1.0a67400000000p-23"),
    float.fromhex("0x1.0c59ca0000000p-23"),
    float.fromhex("0x1.0e50560000000p-23"),
    float.fromhex("0x1.104af60000000p-23"),
    float.fromhex("0x1.1249c60000000p-23"),
    float.fromhex("0x1.144cde0000000p-23"),
    float.fromhex("0x1.1654580000000p-23"),
    float.fromhex("0x1.18604e0000000p-23"),
    float.fromhex("0x1.1a70da0000000p-23"),
    float.fromhex("0x1.1c861a0000000p-23"),
    float.fromhex("0x1.1ea02a0000000p-23"),
    float.fromhex("0x1.20bf2a0000000p-23"),
    float.fromhex("0x1.22e3360000000p-23"),
    float.fromhex("0x1.250c6e0000000p-23"),
    float.fromhex("0x1.273af60000000p-23"),
    float.fromhex("0x1.296eee0000000p-23"),
    float.fromhex("0x1.2ba87c0000000p-23"),
    float.fromhex("0x1.2de7c00000000p-23"),
    float.fromhex("0x1.302ce60000000p-23"),
    float.fromhex("0x1.3278100000000p-23"),
    float.fromhex("0x1.34c96c0000000p-23"),
    float.fromhex("0x1.3721200000000p-23"),
    float.fromhex("0x1.397f5a0000000p-23"),
    float.fromhex("0x1.3be4480000000p-23"),
    float.fromhex("0x1.3e50180000000p-23"),
    float.fromhex("0x1.40c2fe0000000p-23"),
    float.fromhex("0x1.433d2c0000000p-23"),
    float.fromhex("0x1.45bed80000000p-23"),
    float.fromhex("0x1.48483a0000000p-23"),
    float.fromhex("0x1.4ad98a0000000p-23"),
    float.fromhex("0x1.4d73080000000p-23"),
    float.fromhex("0x1.5014f00000000p-23"),
    float.fromhex("0x1.52bf880000000p-23"),
    float.fromhex("0x1.5573100000000p-23"),
    float.fromhex("0x1.582fd40000000p-23"),
    float.fromhex("0x1.5af6200000000p-23"),
    float.fromhex("0x1.5dc6400000000p-23"),
    float.fromhex("0x1.60a08a0000000p-23"),
    float.fromhex("0x1.6385520000000p-23"),
    float.fromhex("0x1.6674f60000000p-23"),
    float.fromhex("0x1.696fd40000000p-23"),
    float.fromhex("0x1.6c76520000000p-23"),
    float.fromhex("0x1.6f88dc0000000p-23"),
    float.fromhex("0x1.72a7dc0000000p-23"),
    float.fromhex("0x1.75d3ce0000000p-23"),
    float.fromhex("0x1.790d2c0000000p-23"),
    float.fromhex("0x1.7c54780000000p-23"),
    float.fromhex("0x1.7faa3e0000000p-23"),
    float.fromhex("0x1.830f120000000p-23"),
    float.fromhex("0x1.8683900000000p-23"),
    float.fromhex("0x1.8a085c0000000p-23"),
    float.fromhex("0x1.8d9e280000000p-23"),
    float.fromhex("0x1.9145ae0000000p-23"),
    float.fromhex("0x1.94ffb40000000p-23"),
    float.fromhex("0x1.98cd100000000p-23"),
    float.fromhex("0x1.9caea40000000p-23"),
    float.fromhex("0x1.a0a5640000000p-23"),
    float.fromhex("0x1.a4b2540000000p-23"),
    float.fromhex("0x1.a8d68c0000000p-23"),
    float.fromhex("0x1.ad13380000000p-23"),
    float.fromhex("0x1.b1699c0000000p-23"),
    float.fromhex("0x1.b5db160000000p-23"),
    float.fromhex("0x1.ba691e0000000p-23"),
    float.fromhex("0x1.bf154e0000000p-23"),
    float.fromhex("0x1.c3e1640000000p-23"),
    float.fromhex("0x1.c8cf440000000p-23"),
    float.fromhex("0x1.cde0fe0000000p-23"),
    float.fromhex("0x1.d318d60000000p-23"),
    float.fromhex("0x1.d879480000000p-23"),
    float.fromhex("0x1.de050a0000000p-23"),
    float.fromhex("0x1.e3bf260000000p-23"),
    float.fromhex("0x1.e9aaf20000000p-23"),
    float.fromhex("0x1.efcc260000000p-23"),
    float.fromhex("0x1.f626ea0000000p-23"),
    float.fromhex("0x1.fcbfe40000000p-23"),
    float.fromhex("0x1.01ce2c0000000p-22"),
    float.fromhex("0x1.0561180000000p-22"),
    float.fromhex("0x1.091c1c0000000p-22"),
    float.fromhex("0x1.0d03180000000p-22"),
    float.fromhex("0x1.111a800000000p-22"),
    float.fromhex("0x1.1567860000000p-22"),
    float.fromhex("0x1.19f03c0000000p-22"),
    float.fromhex("0x1.1ebbca0000000p-22"),
    float.fromhex("0x1.23d2bc0000000p-22"),
    float.fromhex("0x1.293f5a0000000p-22"),
    float.fromhex("0x1.2f0e380000000p-22"),
    float.fromhex("0x1.354ee20000000p-22"),
    float.fromhex("0x1.3c14ec0000000p-22"),
    float.fromhex("0x1.4379760000000p-22"),
    float.fromhex("0x1.4b9d7c0000000p-22"),
    float.fromhex("0x1.54ad840000000p-22"),
    float.fromhex("0x1.5ee7ae0000000p-22"),
    float.fromhex("0x1.6aa6760000000p-22"),
    float.fromhex("0x1.78750e0000000p-22"),
    float.fromhex("0x1.8939fe0000000p-22"),
    float.fromhex("0x1.9e9dc00000000p-22"),
    float.fromhex("0x1.bc39e60000000p-22"),
    float.fromhex("0x1.ec9d920000000p-22"),
)

FE_F = (
    float.fromhex("0x1.0000000000000p+0"),
    float.fromhex("0x1.e0545e0000000p-1"),
    float.fromhex("0x1.cd0a660000000p-1"),
    float.fromhex("0x1.be50080000000p-1"),
    float.fromhex("0x1.b210f00000000p-1"),
    float.fromhex("0x1.a76baa0000000p-1"),
    float.fromhex("0x1.9de9720000000p-1"),
    float.fromhex("0x1.95431c0000000p-1"),
    float.fromhex("0x1.8d4a380000000p-1"),
    float.fromhex("0x1.85de880000000p-1"),
    float.fromhex("0x1.7ee8a20000000p-1"),
    float.fromhex("0x1.7856ea0000000p-1"),
    float.fromhex("0x1.721bb60000000p-1"),
    float.fromhex("0x1.6c2c340000000p-1"),
    float.fromhex("0x1.667fa60000000p-1"),
    float.fromhex("0x1.610edc0000000p-1"),
    float.fromhex("0x1.5bd3d60000000p-1"),
    float.fromhex("0x1.56c9880000000p-1"),
    float.fromhex("0x1.51eba20000000p-1"),
    float.fromhex("0x1.4d366c0000000p-1"),
    float.fromhex("0x1.48a6b00000000p-1"),
    float.fromhex("0x1.44399a0000000p-1"),
    float.fromhex("0x1.3fecb20000000p-1"),
    float.fromhex("0x1.3bbdc40000000p-1"),
    float.fromhex("0x1.37aada0000000p-1"),
    float.fromhex("0x1.33b2340000000p-1"),
    float.fromhex("0x1.2fd23e0000000p-1"),
    float.fromhex("0x1.2c098c0000000p-1"),
    float.fromhex("0x1.2856d20000000p-1"),
    float.fromhex("0x1.24b8e20000000p-1"),
    float.fromhex("0x1.212eac0000000p-1"),
    float.fromhex("0x1.1db7320000000p-1"),
    float.fromhex("0x1.1a518c0000000p-1"),
    float.fromhex("0x1.16fce60000000p-1"),
    float.fromhex("0x1.13b87c0000000p-1"),
    float.fromhex("0x1.1083940000000p-1"),
    float.fromhex("0x1.0d5d880000000p-1"),
    float.fromhex("0x1.0a45b80000000p-1"),
    float.fromhex("0x1.073b940000000p-1"),
    float.fromhex("0x1.043e8e0000000p-1"),
    float.fromhex("0x1.014e2c0000000p-1"),
    float.fromhex("0x1.fcd3e00000000p-2"),
    float.fromhex("0x1.f722d80000000p-2"),
    float.fromhex("0x1.f1886e0000000p-2"),
    float.fromhex("0x1.ec03d40000000p-2"),
    float.fromhex("0x1.e694540000000p-2"),
    float.fromhex("0x1.e139380000000p-2"),
    float.fromhex("0x1.dbf1d80000000p-2"),
    float.fromhex("0x1.d6bd980000000p-2"),
    float.fromhex("0x1.d19bde0000000p-2"),
    float.fromhex("0x1.cc8c1e0000000p-2"),
    float.fromhex("0x1.c78dce0000000p-2"),
    float.fromhex("0x1.c2a06e0000000p-2"),
    float.fromhex("0x1.bdc3820000000p-2"),
    float.fromhex("0x1.b8f6960000000p-2"),
    float.fromhex("0x1.b4393a0000000p-2"),
    float.fromhex("0x1.af8b040000000p-2"),
    float.fromhex("0x1.aaeb8e0000000p-2"),
    float.fromhex("0x1.a65a760000000p-2"),
    float.fromhex("0x1.a1d7620000000p-2"),
    float.fromhex("0x1.9d61f60000000p-2"),
    float.fromhex("0x1.98f9e00000000p-2"),
    float.fromhex("0x1.949eca0000000p-2"),
    float.fromhex("0x1.9050680000000p-2"),
    float.fromhex("0x1.8c0e700000000p-2"),
    float.fromhex("0x1.87d8980000000p-2"),
    float.fromhex("0x1.83ae9c0000000p-2"),
    float.fromhex("0x1.7f90360000000p-2"),
    float.fromhex("0x1.7b7d2a0000000p-2"),
    float.fromhex("0x1.7775380000000p-2"),
    float.fromhex("0x1.7378240000000p-2"),
    float.fromhex("0x1.6f85b40000000p-2"),
    float.fromhex("0x1.6b9db20000000p-2"),
    float.fromhex("0x1.67bfe80000000p-2"),
    float.fromhex("0x1.63ec240000000p-2"),
    float.fromhex("0x1.6022320000000p-2"),
    float.fromhex("0x1.5c61e20000000p-2"),
    float.fromhex("0x1.58ab060000000p-2"),
    float.fromhex("0x1.54fd720000000p-2"),
    float.fromhex("0x1.5158f80000000p-2"),
    float.fromhex("0x1.4dbd700000000p-2"),
    float.fromhex("0x1.4a2ab20000000p-2"),
    float.fromhex("0x1.46a0920000000p-2"),
    float.fromhex("0x1.431eee0000000p-2"),
    float.fromhex("0x1.3fa5a00000000p-2"),
    float.fromhex("0x1.3c34840000000p-2"),
    float.fromhex("0x1.38cb740000000p-2"),
    float.fromhex("0x1.356a520000000p-2"),
    float.fromhex("0x1.3210fc0000000p-2"),
    float.fromhex("0x1.2ebf520000000p-2"),
    float.fromhex("0x1.2b75340000000p-2"),
    float.fromhex("0x1.2832860000000p-2"),
    float.fromhex("0x1.24f7280000000p-2"),
    float.fromhex("0x1.21c3000000000p-2"),
    float.fromhex("0x1.1e95f00000000p-2"),
    float.fromhex("0x1.1b6fde0000000p-2"),
    float.fromhex("0x1.1850b00000000p-2"),
    float.fromhex("0x1.15384e0000000p-2"),
    float.fromhex("0x1.12269c0000000p-2"),
    float.fromhex("0x1.0f1b860000000p-2"),
    float.fromhex("0x1.0c16f00000000p-2"),
    float.fromhex("0x1.0918c40000000p-2"),
    float.fromhex("0x1.0620f00000000p-2"),
    float.fromhex("0x1.032f580000000p-2"),
    float.fromhex("0x1.0043ea0000000p-2"),
    float.fromhex("0x1.fabd240000000p-3"),
    float.fromhex("0x1.f4fe760000000p-3"),
    float.fromhex("0x1.ef4ba00000000p-3"),
    float.fromhex("0x1.e9a4800000000p-3"),
    float.fromhex("0x1.e408ee0000000p-3"),
    float.fromhex("0x1.de78c40000000p-3"),
    float.fromhex("0x1.d8f3e20000000p-3"),
    float.fromhex("0x1.d37a220000000p-3"),
    float.fromhex("0x1.ce0b640000000p-3"),
    float.fromhex("0x1.c8a7840000000p-3"),
    float.fromhex("0x1.c34e660000000p-3"),
    float.fromhex("0x1.bdffe60000000p-3"),
    float.fromhex("0x1.b8bbe80000000p-3"),
    float.fromhex("0x1.b3824c0000000p-3"),
    float.fromhex("0x1.ae52f40000000p-3"),
    float.fromhex("0x1.a92dc40000000p-3"),
    float.fromhex("0x1.a412a00000000p-3"),
    float.fromhex("0x1.9f016e0000000p-3"),
    float.fromhex("0x1.99fa0e0000000p-3"),
    float.fromhex("0x1.94fc6a0000000p-3"),
    float.fromhex("0x1.9008660000000p-3"),
    float.fromhex("0x1.8b1dea0000000p-3"),
    float.fromhex("0x1.863cdc0000000p-3"),
    float.fromhex("0x1.8165240000000p-3"),
    float.fromhex("0x1.7c96ac0000000p-3"),
    float.fromhex("0x1.77d15c0000000p-3"),
    float.fromhex("0x1.73151c0000000p-3"),
    float.fromhex("0x1.6e61d60000000p-3"),
    float.fromhex("0x1.69b7760000000p-3"),
    float.fromhex("0x1.6515e60000000p-3"),
    float.fromhex("0x1.607d100000000p-3"),
    float.fromhex("0x1.5bece00000000p-3"),
    float.fromhex("0x1.5765440000000p-3"),
    float.fromhex("0x1.52e6260000000p-3"),
    float.fromhex("0x1.4e6f760000000p-3"),
    float.fromhex("0x1.4a011e0000000p-3"),
    float.fromhex("0x1.459b0c0000000p-3"),
    float.fromhex("0x1.413d300000000p-3"),
    float.fromhex("0x1.3ce7780000000p-3"),
    float.fromhex("0x1.3899d20000000p-3"),
    float.fromhex("0x1.34542e0000000p-3"),
    float.fromhex("0x1.30167a0000000p-3"),
    float.fromhex("0x1.2be0a80000000p-3"),
    float.fromhex("0x1.27b2a80000000p-3"),
    float.fromhex("0x1.238c680000000p-3"),
    float.fromhex("0x1.1f6dda0000000p-3"),
    float.fromhex("0x1.1b56f20000000p-3"),
    float.fromhex("0x1.17479e0000000p-3"),
    float.fromhex("0x1.133fd20000000p-3"),
    float.fromhex("0x1.0f3f800000000p-3"),
    float.fromhex("0x1.0b46980000000p-3"),
    float.fromhex("0x1.07550e0000000p-3"),
    float.fromhex("0x1.036ad80000000p-3"),
    float.fromhex("0x1.ff0fca0000000p-4"),
    float.fromhex("0x1.f758560000000p-4"),
    float.fromhex("0x1.efaf3a0000000p-4"),
    float.fromhex("0x1.e814600000000p-4"),
    float.fromhex("0x1.e087b00000000p-4"),
    float.fromhex("0x1.d909120000000p-4"),
    float.fromhex("0x1.d198700000000p-4"),
    float.fromhex("0x1.ca35b60000000p-4"),
    float.fromhex("0x1.c2e0d00000000p-4"),
    float.fromhex("0x1.bb99a60000000p-4"),
    float.fromhex("0x1.b460260000000p-4"),
    float.fromhex("0x1.ad343c0000000p-4"),
    float.fromhex("0x1.a615d40000000p-4"),
    float.fromhex("0x1.9f04dc0000000p-4"),
    float.fromhex("0x1.9801440000000p-4"),
    float.fromhex("0x1.910af80000000p-4"),
    float.fromhex("0x1.8a21e80000000p-4"),
    float.fromhex("0x1.8346020000000p-4"),
    float.fromhex("0x1.7c77380000000p-4"),
    float.fromhex("0x1.75b5780000000p-4"),
    float.fromhex("0x1.6f00b40000000p-4"),
    float.fromhex("0x1.6858de0000000p-4"),
    float.fromhex("0x1.61bde60000000p-4"),
    float.fromhex("0x1.5b2fbe0000000p-4"),
    float.fromhex("0x1.54ae5c0000000p-4"),
    float.fromhex("0x1.4e39b00000000p-4"),
    float.fromhex("0x1.47d1ae0000000p-4"),
    float.fromhex("0x1.41764a0000000p-4"),
    float.fromhex("0x1.3b277a0000000p-4"),
    float.fromhex("0x1.34e5320000000p-4"),
    float.fromhex("0x1.2eaf680000000p-4"),
    float.fromhex("0x1.2886120000000p-4"),
    float.fromhex("0x1.2269260000000p-4"),
    float.fromhex("0x1.1c589a0000000p-4"),
    float.fromhex("0x1.1654680000000p-4"),
    float.fromhex("0x1.105c880000000p-4"),
    float.fromhex("0x1.0a70f20000000p-4"),
    float.fromhex("0x1.04919e0000000p-4"),
    float.fromhex("0x1.fd7d0c0000000p-5"),
    float.fromhex("0x1.f1ef4a0000000p-5"),
    float.fromhex("0x1.e679ea0000000p-5"),
    float.fromhex("0x1.db1ce40000000p-5"),
    float.fromhex("0x1.cfd8300000000p-5"),
    float.fromhex("0x1.c4abc60000000p-5"),
    float.fromhex("0x1.b997a20000000p-5"),
    float.fromhex("0x1.ae9bbc0000000p-5"),
    float.fromhex("0x1.a3b8140000000p-5"),
    float.fromhex("0x1.98eca80000000p-5"),
    float.fromhex("0x1.8e39760000000p-5"),
    float.fromhex("0x1.839e820000000p-5"),
    float.fromhex("0x1.791bcc0000000p-5"),
    float.fromhex("0x1.6eb1580000000p-5"),
    float.fromhex("0x1.645f2c0000000p-5"),
    float.fromhex("0x1.5a25520000000p-5"),
    float.fromhex("0x1.5003d00000000p-5"),
    float.fromhex("0x1.45fab20000000p-5"),
    float.fromhex("0x1.3c0a040000000p-5"),
    float.fromhex("0x1.3231d80000000p-5"),
    float.fromhex("0x1.28723c0000000p-5"),
    float.fromhex("0x1.1ecb460000000p-5"),
    float.fromhex("0x1.153d0a0000000p-5"),
    float.fromhex("0x1.0bc7a00000000p-5"),
    float.fromhex("0x1.026b260000000p-5"),
    float.fromhex("0x1.f24f6c0000000p-6"),
    float.fromhex("0x1.dffae80000000p-6"),
    float.fromhex("0x1.cdd9060000000p-6"),
    float.fromhex("0x1.bbea160000000p-6"),
    float.fromhex("0x1.aa2e6e0000000p-6"),
    float.fromhex("0x1.98a6700000000p-6"),
    float.fromhex("0x1.8752860000000p-6"),
    float.fromhex("0x1.76331e0000000p-6"),
    float.fromhex("0x1.6548b80000000p-6"),
    float.fromhex("0x1.5493da0000000p-6"),
    float.fromhex("0x1.44151c0000000p-6"),
    float.fromhex("0x1.33cd220000000p-6"),
    float.fromhex("0x1.23bc9e0000000p-6"),
    float.fromhex("0x1.13e4560000000p-6"),
    float.fromhex("0x1.0445200000000p-6"),
    float.fromhex("0x1.e9bfde0000000p-7"),
    float.fromhex("0x1.cb6b920000000p-7"),
    float.fromhex("0x1.ad8fa60000000p-7"),
    float.fromhex("0x1.902ea60000000p-7"),
    float.fromhex("0x1.734b6e0000000p-7"),
    float.fromhex("0x1.56e9300000000p-7"),
    float.fromhex("0x1.3b0b8c0000000p-7"),
    float.fromhex("0x1.1fb69e0000000p-7"),
    float.fromhex("0x1.04ef220000000p-7"),
    float.fromhex("0x1.d575200000000p-8"),
    float.fromhex("0x1.a23e9e0000000p-8"),
    float.fromhex("0x1.7049f40000000p-8"),
    float.fromhex("0x1.3fa97c0000000p-8"),
    float.fromhex("0x1.1073d60000000p-8"),
    float.fromhex("0x1.c58b380000000p-9"),
    float.fromhex("0x1.6d88900000000p-9"),
    float.fromhex("0x1.1946ba0000000p-9"),
    float.fromhex("0x1.92bb560000000p-10"),
    float.fromhex("0x1.fb20b00000000p-11"),
    float.fromhex("0x1.dc31c40000000p-12"),
)

TA_NORM = (
    0,
    20282409603651666691551578979581,
    5027301626057710025460085563235,
    2994171153371147964208347816410,
    2129440718172168088265366175743,
    1652226085826795763257600078512,
    1350370027529317392512849348731,
    1142482427123830126142899353590,
    990712140267816696112361229415,
    875096264101964628251158222056,
    784121065471194299490462477710,
    710684774487481260497648950281,
    650171476467569448138231967825,
    599452185195567698296635488172,
    556331378537913890244045264075,
    519223416245701491767437204347,
    486954726315827468473275310719,
    458638234515783497420182986994,
    433591040781024874101768671846,
    411278919310491408765858711711,
    391277976722876856419067600373,
    373247586366962880476089625093,
    356910912652769785974546114297,
    342040654339893750838576191858,
    328448445707066919440817022057,
    315976866085048841282465449461,
    304493338691923937078533947391,
    293885417582934987195212924129,
    284057107869682223288155605363,
    274925964341474722703690694655,
    266420782998119758867422248959,
    258479748840262828192588235509,
    251048938099625570709306081279,
    244081098249035750352456273691,
    237534647507781757031683161001,
    231372849123513268748395411623,
    225563125827327227732441432063,
    220076487470600091305884254207,
    214887050632179189163262930675,
    209971633407592389943668693119,
    205309412005050272500935203905,
    200881628424025718818922251296,
    196671340567451056566161616321,
    192663207771896591078444236799,
    188843306035213774871891378779,
    185198968252851717395939779535,
    181718645601566679959529243288,
    178391786875495421604714653588,
    175208733119771092426722401388,
    172160625346125822740488826845,
    169239323474053506265247767075,
    166437334936415385410494338033,
    163747717570553019023434321199,
    161161828354541170216736709713,
    158675956328754429023284631572,
    156284883728202692268556626738,
    153983534792553561455408000480,
    151767191046401142182070270233,
    149631463508659603390924922211,
    147572264904630084611767988364,
    145585784357915310629531620692,
    143668464530866405432640715659,
    141816980983225167032072772046,
    140028223512357211064746780765,
    138299279260302240804915967213,
    136627417396726973807549782507,
    135010075209436478132343931514,
    133444845454316977423166587390,
    131929464833617781307281017402,
    130461803487199178842993851884,
    129039855394311055893066467701,
    127661729595436644009916231001,
    126325642153563455638848421433,
    125029908783430176158807331250,
    123772938084876590424943262454,
    122553225323562431288088042309,
    121369346707997632905684702087,
    120219954117528445758686587940,
    119103770240469445630800849094,
    118019584085619346436224677086,
    116966246834387025908385900533,
    115942668003751754930207326364,
    114947811893443570359142623817,
    113980694293079489519140950055,
    113040379427551676058780107324,
    112125977120899827848962468729,
    111236640160731126793702521217,
    110371561847081622676046782826,
    109529973710814556268744611817,
    108711143388307448471610508948,
    107914372640198293437226427594,
    107138995502952025154422832204,
    106384376563324164534449898353,
    105649909346314221574631158935,
    104935014808142989040452905510,
    104239139926629633568360618567,
    103561756381765834953063212683,
    102902359320099380014590553279,
    102260466196811892661170948133,
    101635615690241152436477235116,
    101027366683609812743147481685,
    100435297309480207076359083030,
    99859004052596239234500014791,
    99298100907294622953631168479,
    98752218585764982867066285263,
    98221003773892425753618098503,
    97704118431653134783656500127,
    97201239135096135477749037622,
    96712056457453886457204672422,
    96236274386855438087897690725,
    95773609778422711053131631510,
    95323791838737881636997698502,
    94886561640623350359997782908,
    94461671666717350618349628251,
    94048885379911927785759829298,
    93647976819348703708103660494,
    93258730220463453065559760261,
    92880939657825391434076438053,
    92514408709520605575676211752,
    92158950142046487080735911344,
    91814385614576618323704255775,
    91480545401734830571718231712,
    91157268133982040082098729432,
    90844400554725614797342429910,
    90541797293573691951723535604,
    90249320654848091706124783278,
    89966840420851565352926125525,
    89694233669305082559744872432,
    89431384604407436170045093093,
    89178184400982217184272169530,
    88934531061407171318671615134,
    88700329284800133288952142893,
    88475490348267848501962452396,
    88259931999725517303478623886,
    88053578362173910823419153542,
    87856359849162486807578123957,
    87668213091158157792538450930,
    87489080872852957358936718939,
    87318912081036837009944838807,
    87157661663207705972453263955,
    87005290596678302978091368753,
    86861765868237042506739489002,
    86727060464386978197694005407,
    86601153372259400450939184997,
    86484029591141225047308473332,
    86375680154903022504390956479,
    86276102165502220369371256031,
    86185298837571427761310216240,
    86103279554595146899988937820,
    86030059936751094789934994430,
    85965661920957333951106897702,
    85910113853240746820461418979,
    85863450594132315537399318532,
    85825713637444848997814957210,
    85796951242883243975971600334,
    85777218583320256658611490892,
    85766577907141260442100002147,
    85765098716596920270231334467,
    85772857962881091956537390863,
    85789940258743574028127264882,
    85816438109795224836799095935,
    85852452165374513807062544214,
    85898091490298710354583729876,
    85953473858636483035966773967,
    86018726070964298604210689352,
    86093984296652654091035028765,
    86179394442801586083087817953,
    86275112551610056502777341987,
    86381305228242083050357913312,
    86498150101335025803698961686,
    86625836318496451861396020802,
    86764565079450520867380677448,
    86914550209604256557229497545,
    87076018777265024061873185356,
    87249211757819936791287920022,
    87434384748764898662933782789,
    87631808739592351501438026014,
    87841770941160568200818699925,
    88064575679542560089709301142,
    88300545359826161896248619745,
    88550021505965087775599011546,
    88813365883420147005256986113,
    89090961711936548887331113402,
    89383214976747248789027001520,
    89690555847185969122776100457,
    90013440212962725340628042394,
    90352351349090308721976540900,
    90707801722167751421144558243,
    91080334951668878898480509075,
    91470527941951186969877092948,
    91878993202080914794832389799,
    92306381373046148204685807786,
    92753383983904864706408958730,
    93220736461292936416381135805,
    93709221419815380168435285546,
    94219672263959753653014777214,
    94752977136657331003678671008,
    95310083253708201470433756206,
    95892001668853907917596374736,
    96499812520165030472920583063,
    97134670815387621245503529190,
    97797812822159313068608952433,
    98490563138147144299663859833,
    99214342527259100240665017518,
    99970676620781912601523012420,
    100761205597342236805067406074,
    101587694972757169946867832762,
    102452047652033737679817590797,
    103356317419639703400075101922,
    104302724073216895995939380255,
    105293670440329446638800271084,
    106331761558517565778496063762,
    107419826348072672562811962952,
    108560942165792640137063281331,
    109758462698767130520936555705,
    111016049743568873829718560292,
    112337709520397059333551824668,
    113727834299839463161572465415,
    115191250276680397798899590807,
    116733272818544893101618909923,
    118359770457347042570516009052,
    120077239290558027092312021020,
    121892889834326169872204715701,
    123814748843638017031903516387,
    125851779215310397605342054270,
    128014021856594819041734731925,
    130312764390096004749736479967,
    132760742845348119330013203964,
    135372384160871839012063259361,
    138164099524924953019895370290,
    141154641515120316932611543824,
    144365541933347492449317912204,
    147821652571307410980131863863,
    151551818464427197022913308367,
    155589723353379005792321098384,
    159974961355378363283394693107,
    164754409202684796150693161368,
    169984002853495259641237695654,
    175731065582234137531003935140,
    182077399479956248409476940917,
    189123451258844730353578291594,
    196994017647315796496559645021,
    205846202389570319414032724435,
    215880741875821943573687766563,
    227358501641265932163289937059,
    240625145562317741665158423669,
    256149163416078004447157511094,
    274582601817253605861184894760,
    296862195355116309300755281099,
    324386451054919602230767367591,
    359345428059869715606366731192,
    405384335135453645947711314100,
    469080394825061718600933689589,
    563713695736215456586554746578,
    721041454587949480437205465766,
    1042658099352333837239725714496,
)

TR_NORM = (
    0,
    25309051249093369909388136438053,
    5193979887033198710498016620415,
    3048067125195212914434552511232,
    2155212124622546927831547080384,
    1667074085713567842855738543106,
    1359916243940366586277349941136,
    1149079787113127402044490206835,
    995510688421648873352119524183,
    878721692060048754692834161644,
    786941674935681169279626733507,
    712930859803922030237811831829,
    651994097004286317193844734499,
    600954354406806768546429291659,
    557585644970492751927149624254,
    520282278288646499773912322808,
    487857063816077213245303123448,
    459413423646626741747709716257,
    434261668131351062833027078593,
    411862620161078475218303244424,
    391788709479386814006320850698,
    373696534516495177131248377808,
    357307134965629206251055683828,
    342391561394643571942743297431,
    328760154377022839948547477469,
    316254466832138960634201179494,
    304741099614848218184387363922,
    294106941951950770450003017933,
    284255457018008089399467931072,
    275103754452042042877076714474,
    266580262007315583526863157426,
    258622858046072767493002092456,
    251177361893952130384298979048,
    244196304549748407923029576611,
    237637920848770712564929756446,
    231465317904985765630344631774,
    225645784888409927345282647596,
    220150216890205453617230251677,
    214952631469655347394082557455,
    210029760945854517997502597268,
    205360706944166926025726474709,
    200926646384074058394670060137,
    196710580189859544104489418006,
    192697117653764773644028627722,
    188872290687982986589792801805,
    185223393242789879858505242962,
    181738842003470852733217959430,
    178408055152890482245820600758,
    175221346539248489672224144073,
    172169833063009911714838046940,
    169245353625191671883022368176,
    166440399760053738206383144520,
    163748123746220850006871790255,
    161164194104319769994034001728,
    158680762010498247233009352705,
    156291990049562660032666330349,
    153992808679142863290104043736,
    151778509014036329689851625473,
    149644711399684012288041720676,
    147587337218981189028544032785,
    145602583551043328950763141422,
    143686900350847647307259799020,
    141836969862230426459723621863,
    140049688013171739290022221006,
    138322147574496711895213408257,
    136651622889991168997794060415,
    135035556009513859627350462931,
    133471544077273064424983232513,
    131957327844524335506007566306,
    130490781191737233034537074689,
    129069901558145047863006068737,
    127692801188577373426827347164,
    126357699117224088449444741121,
    125062913817149761246900573922,
    123806856451962154533525651457,
    122588024673063885273497883675,
    121404996911666461592624344955,
    120256427120333227074981622521,
    119141039923438892066587140416,
    118057626139860175724517629384,
    117005038645286557738925363041,
    115982188544448449821417465980,
    114988041626757214227309513666,
    114021615081159312327129491315,
    113081974448587680196268769914,
    112168230792291517624907273535,
    111279538068184459631017328641,
    110415090679135583040925656953,
    109574121198368826275431119793,
    108755898248738299360070074369,
    107959724525699879783576532247,
    107184934952794323593059150916,
    106430894959690576469984018433,
    105696998873483350004840085783,
    104982668414746727689368895489,
    104287351290765958794336811286,
    103610519878763160379250919976,
    102951669992740421620563769050,
    102310319727849595082169647105,
    101686008377052683613214522205,
    101078295414841119820390334465,
    100486759543549361623453100605,
    99910997797952648486393538434,
    99350624704302932174582054913,
    98805271490128309840936697857,
    98274585341529184438865023169,
    97758228704931089773043944048,
    97255878630358007222841037521,
    96767226153766898910874826412,
    96291975715919256229439864833,
    95829844615581802121578676225,
    95380562495040233246327902076,
    94943870855898551375752653855,
    94519522603610218617864625216,
    94107281618844608409005090143,
    93706922354385506271559708171,
    93318229456036302229312897025,
    92940997406300281725772764041,
    92575030189589347009214030282,
    92220140977911852445812164356,
    91876151835925303998930553278,
    91542893444481028279904719975,
    91220204841774505906549683559,
    90907933181205959199425844007,
    90605933505391666667314172776,
    90314068535414864023912065493,
    90032208474851109977938522004,
    89760230827956584426722009709,
    89498020231482558162945933764,
    89245468299590731761335451068,
    89002473481564991719208097989,
    88768940931778634489119614027,
    88544782391764905891393233334,
    88329916083853875065715343283,
    88124266616297955675102195775,
    87927764899616251522529208942,
    87740348073855980812350120902,
    87561959446837070424449754050,
    87392548442989000067018321792,
    87232070562965220064440059696,
    87080487353789232229432091578,
    86937766389616303646961426787,
    86803881263089339330998566913,
    86678811587465487492851957761,
    86562543009373814492496474866,
    86455067232561769439854525238,
    86356382052774296246730453943,
    86266491403785842405762043151,
    86185405415112949050606838080,
    86113140481462500312172360078,
    86049719344485018669705854977,
    85995171186946629461749006337,
    85949531740037205431228039169,
    85912843404161102216028908918,
    85885155383715460938170142311,
    85866523836628905540206841334,
    85857012039151760432442541215,
    85856690566783028950269427713,
    85865637492103149829981470721,
    85883938600330546182729350242,
    85911687623760790160771023776,
    85948986495973752142735941038,
    85995945627181545589395423233,
    86052684201822590473700422033,
    86119330499936003275154040462,
    86196022243846019298334081025,
    86282906971825206490908276712,
    86380142440541648315312242689,
    86487897058386272600994864737,
    86606350351848291010871296001,
    86735693467348425248211992577,
    86876129711190551742876967806,
    87027875130505323638593832560,
    87191159138404512875970776654,
    87366225186754274839039711554,
    87553331490516422260772972108,
    87752751807700695497164669585,
    87964776279661506641317612870,
    88189712336814100304782852021,
    88427885675315089432551643098,
    88679641310944948581136737288,
    88945344717009549279344379776,
    89225383053774759594725212161,
    89520166497840421668342726657,
    89830129680621884003187791352,
    90155733246354148613537610756,
    90497465540837961873670275073,
    90855844443842057669168628501,
    91231419359090304763924797276,
    91624773377832144458332582647,
    92036525633436840022144712705,
    92467333866959546551013212161,
    92917897225650409131213172650,
    93388959319346596441613461418,
    93881311562792741331879770324,
    94395796835220245099115970561,
    94933313492994015016723152897,
    95494819775420146078172786016,
    96081338649457898960105698148,
    96693963145112731006802685648,
    97333862240461721904302410620,
    98002287363699303968053133313,
    98700579589018222507112533533,
    99430177614478990425229051070,
    100192626623093723515421575611,
    100989588143801937884122459477,
    101822851046636054198592551235,
    102694343828173023546784377626,
    103606148367947140249252003841,
    104560515366314642335036604417,
    105559881709797686636485611412,
    106606890051783312841396371165,
    107704410947113345997351157761,
    108855567939870494836713837730,
    110063766076624229124613424377,
    111332724406677067052055789569,
    112666513138432078152239939585,
    114069596253607010260106608641,
    115546880543215172866799566849,
    117103772229627201953805288851,
    118746242588034750235521320808,
    120480904290993535353234760910,
    122315100589293635882469851934,
    124257009934456176029037008063,
    126315769273216295587927077539,
    128501620043790868501876529778,
    130826081934295193442162124337,
    133302160800465494471620452105,
    135944598890334082851021087441,
    138770177832533023158507791079,
    141798087920768969673940140033,
    145050381363133342632279857978,
    148552532784635176491212400365,
    152334137993404492471148836583,
    156429792758655282256839881715,
    160880208474453229997141036417,
    165733643191048084297809402374,
    171047757836414114452528431105,
    176892053666975452403446317057,
    183351116389250080058696597260,
    190528998713743764287031968099,
    198555239607868396140332965095,
    207593285740907765277113974785,
    217852521396852306137166381057,
    229605862954253117597328585772,
    243216194997992958559783841815,
    259177347462507594666533436814,
    278179966280799515932296479225,
    301222068507438964581083381761,
    329804502558768391462143147303,
    366299385311420024487565789358,
    414703251625743493415052014759,
    482349463508384819411878499926,
    584418266816368511786844896649,
    758741796332995780846073260541,
    1137158301037369745992550233106,
)

TA_EXP = (
    0,
    40241068604358908767475619003556,
    15777464367810889369283594101524,
    9552835683855308010173254294175,
    6811067112088407713523378427078,
    5286103694930625706569781795240,
    4319928470463670245490843766358,
    3654664453455489120960167396463,
    3169363080683244282505659098925,
    2800010707342754474601085203027,
    2509639123664555009509623432515,
    2275440953143929486473418242924,
    2082596865586409726462834718119,
    1921067190990427588927836179009,
    1783812397421370249679986985898,
    1665752293210985425200184841835,
    1563129777029671133756599698789,
    1473107063008846970629647142948,
    1393501080938512133712720864073,
    1322605184584772298743288150111,
    1259066050159999927309703126977,
    1201796830164563136823549956579,
    1149914699133683979060902703601,
    1102695162790002661058257683718,
    1059538110107472423678397378965,
    1019942234483268040404831849650,
    983485513591485548277995741704,
    949810138326443226247998199921,
    918610751787185714911477205537,
    889625180585129172627109898020,
    862627063633203789385519611480,
    837419940395706046413494395124,
    813832472393391219132293486044,
    791714552469004736292764818564,
    770934115247101193399414495965,
    751374505706778151914116234433,
    732932295195763900291615301148,
    715515458595802518184339796716,
    699041844851400104005681976887,
    683437887231678730018359447095,
    668637510611435218889318509430,
    654581201537299250444460639010,
    641215213476452312972018674190,
    628490884867469980299391035436,
    616364051727843118873282384802,
    604794539869658751097016989457,
    593745724414756479465367386850,
    583184146429181873122466900587,
    573079178218548618255752771341,
    563402730228036966282505074846,
    554128993636176327387108652777,
    545234213672006163943975397788,
    536696489461068236447388667874,
    528495596847250060145407346799,
    520612831171328750129385702406,
    513030867432176718111545312733,
    505733635628911492619940441251,
    498706209395524090810405977837,
    491934706303429467017615637224,
    485406198430036588889023386078,
    479108631981109119103007195274,
    473030754915471107171793707829,
    467162051657676096318695619772,
    461492684102130646217206322859,
    456013438212669601198763168956,
    450715675608122287921184990133,
    445591289599441870443215110244,
    440632665208175931810183049642,
    435832642752154792082054943705,
    431184484632795319884196385084,
    426681845000505617593289513648,
    422318742011822652909370807402,
    418089532423704704055668042376,
    413988888298769231281599308799,
    410011775620021786986785888865,
    406153434635249349327876516088,
    402409361770289963651836679540,
    398775292967457781776289567067,
    395247188320065002757565538072,
    391821217887375308855637975537,
    388493748585923165349522086669,
    385261332063334176808525019253,
    382120693470524556236975210265,
    379068721055570134744310926504,
    376102456510804393182608781085,
    373219086010443022622153653566,
    370415931882245271574080260930,
    367690444862288291997752919036,
    365040196885767234700356398169,
    362462874371945594095700813681,
    359956271964498763843926619811,
    357518286692115886354262687962,
    355146912517546858949444057597,
    352840235245595556411323633760,
    350596427763526514573866819930,
    348413745589347485093483186645,
    346290522705632627057476373042,
    344225167658286627103141861857,
    342216159901632784582697192236,
    340262046372262283660766495306,
    338361438276081284056100329053,
    336513008073713276334844374045,
    334715486650997869948422044628,
    332967660662099871165586142065,
    331268370034003977356774895220,
    329616505621756433342722409359,
    328011007004764826013052026812,
    326450860415289516436591950630,
    324935096790869000649006609447,
    323462789943043805627830969002,
    322033054835148012233498665982,
    320645045963056194688569950653,
    319297955832410892568096825805,
    317991013527035167352247194116,
    316723483363357755518170932212,
    315494663625864660960813863152,
    314303885379455432300825506750,
    313150511354380782488361389551,
    312033934900151706202306271735,
    310953579004870710305444585809,
    309908895376649790594479399804,
    308899363584401180549388237485,
    307924490254992570758788347504,
    306983808324479361961535245410,
    306076876340812203294060503118,
    305203277816283130027950227786,
    304362620627318164627684983753,
    303554536460313796125346102088,
    302778680301432669051590967090,
    302034729969371229414460910143,
    301322385689384942415519744821,
    300641369707673954611017983637,
    299991425945087947203451885727,
    299372319689020974073023729010,
    298783837323075807286626994522,
    298225786093523620422692700681,
    297697993912358454396258991937,
    297200309196162980615599467919,
    296732600740984897358426863430,
    296294757632578533023684275094,
    295886689192306581593203061391,
    295508324958649696590498946773,
    295159614704474377555550172035,
    294840528490530672901605226641,
    294551056755406266326670305162,
    294291210442703871661326304898,
    294061021166065810460236385002,
    293860541412787412521134020228,
    293689844787286161474383001594,
    293549026295149527553626766552,
    293438202669432904490537163146,
    293357512740426500982819169487,
    293307117850660667526712182649,
    293287202316792526977050995240,
    293297973940578370777060146175,
    293339664571135237906388031365,
    293412530720724465896321729088,
    293516854237038825596284492894,
    293652943034834975033809771054,
    293821131890094956475754446165,
    294021783300362773472438833487,
    294255288415141438688380932494,
    294522068040450264626500468080,
    294822573722408915606901851173,
    295157288914723406571959591709,
    295526730235717698053106276217,
    295931448820857066256021324466,
    296372031777449150649621792695,
    296849103748691414322799239452,
    297363328595011439332408828207,
    297915411201142737994108415313,
    298506099418616038075366551824,
    299136186153810516445337176980,
    299806511612945988634589661391,
    300517965716445416053129932673,
    301271490696254394692967990222,
    302068083891057472274294848434,
    302908800755870162772087404274,
    303794758104085366706283473339,
    304727137601894711166867862554,
    305707189537092895285858061356,
    306736236886435954066939637759,
    307815679708481008458312743515,
    308946999891503280346975764925,
    310131766289358150588839757009,
    311371640281718125231042410323,
    312668381799321205364391700727,
    314023855859104831600263144175,
    315440039659440856301506555615,
    316919030291567637522536902753,
    318463053129562265492414980536,
    320074470969017090307797702626,
    321755793992627601186567998502,
    323509690651018304900071125911,
    325338999557435432347587283270,
    327246742508296328919129702519,
    329236138755049067302973288864,
    331310620669960793359819001536,
    333473850967098617787219067360,
    335729741661416147512682680753,
    338082474974537396622578840632,
    340536526424365571842158177645,
    343096690370190491845573436476,
    345768108323970252171363142376,
    348556300384514981724174474696,
    351467200205422723028791813155,
    354507193970293458930882926915,
    357683163923922567700187910536,
    361002537094953437481898827402,
    364473339950521983724289976300,
    368104259846153172288368763790,
    371904714282323393717821587985,
    375884929154854851523702493709,
    380056027398579555659485406481,
    384430129679340899347486101312,
    389020469098590052283071355861,
    393841522251351961184626482100,
    398909159438013833529551430014,
    404240817394431915884040493039,
    409855698600879666040075024460,
    415775002092151976599311212510,
    422022191766582640463279203172,
    428623309538009446074205798769,
    435607342373452343169157830629,
    443006654413550814660605280483,
    450857498124715245643219246510,
    459200621970969847835366426523,
    468081996679461955599772712226,
    477553688162580810797020406440,
    487674913046904867929356077556,
    498513323239588353353466241862,
    510146580022321348132569611933,
    522664297215786488968959994200,
    536170459062296662517185955952,
    550786454662016051487578008670,
    566654921602413362197429857252,
    583944663729327204141335346442,
    602857012459713378457262256470,
    623634154381326715644517349812,
    646570177017342304632668542671,
    672025933717741783391246794626,
    700449371958714126710687411463,
    732403835251254932126304829784,
    768608265897133210341627958312,
    809995624609527806058604791837,
    857800007415944004297092792446,
    913690483682233738709382722095,
    979983960253094585047424908070,
    1059997842901058971853393819122,
    1158663572735841740632618647429,
    1283659603020532529911721075525,
    1447665446530212783558932844753,
    1673298100195504380414031375477,
    2005412217457298318572628882787,
    2547945016352971235367156527961,
    3611021419801797014552404839630,
)

TR_EXP = (
    0,
    40564819207303340847894502572033,
    15858711296290098295091847233537,
    9591761447447176369350265967821,
    6834837259983669184758528448144,
    5302562088337139593187579198435,
    4332228022293905141802101981938,
    3664337774587257200281666712517,
    3177253699457239203944116804127,
    2806625477689821048970138997595,
    2515303174158908246102305144833,
    2280373665680694844324547689551,
    2086952360649992332196863471166,
    1924957362675251552507983757802,
    1787320734969388367050080065734,
    1668942546860121740149329469131,
    1566051595986851219269076205384,
    1475799781049731200781838732779,
    1395996328417322788913888106482,
    1324928734011734100804043799117,
    1261239147786785673544781004801,
    1203837174702822591952958140123,
    1151837173124053531299160063866,
    1104512387323421194585317929399,
    1061260871255839534815947823700,
    1021579815132056425442089574454,
    985045954547749894406211478110,
    951300445878943828500397403718,
    920037064251612575224750931165,
    890992903097465386449442370220,
    863940978119205619525956519837,
    838684295955169828787998988288,
    815051060100918222326526681727,
    792890767677206043148545429982,
    772071009793048050612173882835,
    752474831904865263877852261465,
    733998543105683250643940147201,
    716549887750938166599716316386,
    700046511397867879921463853057,
    684414667244759458297351874123,
    669588120211748200296430436353,
    655507214314836095907291556264,
    642118075639519794234108326543,
    629371928460703488992227277743,
    617224506204558001602498852464,
    605635542256257438169065049867,
    594568328265958044259922307827,
    583989329741219479211561666853,
    573867850441180315497294914212,
    564175738494768729941358737739,
    554887128314108074702258631908,
    545978213317798071134916437379,
    537427045257086910343667006125,
    529213356581436807411674846681,
    521318402815551662066302329426,
    513724822366317575995276538949,
    506416511551702166751783981596,
    499378512957641672750381926158,
    492596915493911994242211784048,
    486058764743013316429026998189,
    479751982386568654902071902066,
    473665293654842226626731157592,
    467788161882479126212140678301,
    462110729371807382390547719878,
    456623763865858153961679499465,
    451318610019907350752972328429,
    446187145335775487689135990849,
    441221740087429987719705742410,
    436415220822546746820845259047,
    431760837073676899180516842658,
    427252230954450157944572670400,
    422883409353895430298487750657,
    418648718473513674407738867713,
    414542820480392905722477208205,
    410560672074357038302192626185,
    406697504788913050754430250175,
    402948806864773286336896984182,
    399310306551871661353399343220,
    395777956710514912540570636299,
    392347920595728098787806150657,
    389016558720439707423523827546,
    385780416703427830925702442506,
    382636214017725100688169488835,
    379580833562563381567299605420,
    376611311990246542672828301313,
    373724830725133150500957688068,
    370918707618064082335027415596,
    368190389185242880789201863971,
    365537443384318889588219934701,
    362957552885702856675777651688,
    360448508800365858374998488384,
    358008204828725478924152160310,
    355634631798913708133048079078,
    353325872564763446424164822188,
    351080097236914524185338056098,
    348895558722501920965269651457,
    346770588550995386241323361502,
    344703592965589742109910032353,
    342693049261409859384072167605,
    340737502353017349625733748122,
    338835561555573296230542603505,
    336985897564795109227387420673,
    335187239622406273167707740975,
    333438372854588153550691616337,
    331738135772177802984924616662,
    330085417921932517051340231585,
    328479157679197935672107349074,
    326918340173025162408848315831,
    325401995335547251857667199795,
    323929196067896539199879396860,
    322499056515433845333343702111,
    321110730446208466953201224198,
    319763409726097067072980571501,
    318456322885353886481935452852,
    317188733771414344784880160770,
    315959940282877651422533502431,
    314769273180644681716760754592,
    313616094971780753326363597947,
    312499798862567327995915778062,
    311419807777162217008844934887,
    310375573438478951759797388079,
    309366575508666044595492154679,
    308392320786086060888749506561,
    307452342456580861837794483600,
    306546199396324399802857210510,
    305673475524647898582405553731,
    304833779204334816533456325794,
    304026742688152742267011321496,
    303252021609518072028729104058,
    302509294516294442335415889092,
    301798262446050331378786577500,
    301118648541816901711146340097,
    300470197707427490866666881645,
    299852676301145754521098977330,
    299265871867353883336896955369,
    298709592905154653240250335233,
    298183668673866607277666744013,
    297687949034482105283314734940,
    297222304327415327735557534575,
    296786625285828032415784981143,
    296380822984877974230929928010,
    296004828826869402022395485272,
    295658594562384163082250407270,
    295342092348003262502793014844,
    295055314840748438199825690413,
    294798275330107789373683401121,
    294571007908244327125030117293,
    294373567679159876846599951858,
    294206031008154384966751857593,
    294068495812214355244990866615,
    293961081893169758355776725918,
    293883931314739549222826980753,
    293837208825396378123346652788,
    293821102328587462070495963737,
    293835823402675978017724385048,
    293881607872798502412539727378,
    293958716436905300343458863257,
    294067435349027005005403563771,
    294208077162686750425553253735,
    294380981537685456100748571289,
    294586516113928330245025797503,
    294825077456352017667766733760,
    295097092075004088461537059418,
    295403017525340339605293891711,
    295743343593637268888514784118,
    296118593573288256029315796472,
    296529325638053254779463610939,
    296976134319048227568437417503,
    297459652092780024845149208475,
    297980551088388409684393897753,
    298539544922558664585884437855,
    299137390672142064820480711526,
    299774890994687735600060182413,
    300452896408550719834940481856,
    301172307745264527958714108246,
    301934078787983931842456952267,
    302739219111287326503186986648,
    303588797139109642005370706206,
    304483943439294369776221250598,
    305425854275065550166042497529,
    306415795435906819731263875620,
    307455106372508588367084252460,
    308545204663322886909170110918,
    309687590842897865444127932417,
    310883853625671420277361399303,
    312135675562333055178972008615,
    313444839170434566023068137789,
    314813233585038789730611682022,
    316242861780791115659298161246,
    317735848422878399130708743142,
    319294448410579833140967325592,
    320921056185315166134899727462,
    322618215883267194015833725451,
    324388632423071466365418397503,
    326235183629584603029123111215,
    328160933508660752798624347010,
    330169146801452928494732832628,
    332263304964643044910788047725,
    334447123742042299134173968920,
    336724572515375250786472926230,
    339099895648499323645410639811,
    341577636068630006480249252914,
    344162661363929668147550216627,
    346860192716886715659821960978,
    349675837040520485049867436033,
    352615622740335549724263121109,
    355686039589631221198903320906,
    358894083283627503246782383354,
    362247305327437280587072667649,
    365753869021820706168467496948,
    369422612437643614676727153301,
    373263119423548079532979108434,
    377285799873622545953414633164,
    381501980702069017401293848911,
    385924009237493045993928133442,
    390565371070723150601971046713,
    395440824781722038974027923457,
    400566556449834554211948841277,
    405960357439352118219455091122,
    411641829678377679470563286484,
    417632623548825635632896686323,
    423956714629441872385860676255,
    430640726942424434647766929110,
    437714312133798557891803064716,
    445210596277289317425994634140,
    453166708881567158458868759418,
    461624412402639048453944539332,
    470630855393334116954406167768,
    480239478739301719565046655524,
    490511112764763011765666661725,
    501515314084623100678517270679,
    513332005989683887688892102844,
    526053506398318623367921649636,
    539787055209386846025494573846,
    554657991522245301605839502201,
    570813785563423902287089631233,
    588429207764760451480705310916,
    607713029881772424152363831803,
    628916818670754918581973531626,
    652346631041288184437091074049,
    678378799574249876346405545010,
    707481591368168523154178845725,
    740245474784165312571463381543,
    777426294825359575599313879636,
    820008315236225636390665961912,
    869298752627981067177938279498,
    927073955548295927525185688316,
    995813690773987088812959215162,
    1079092905313831802247256735745,
    1182271084604422366598223510870,
    1313783636938965955381874763742,
    1487759608483141845208462990732,
    1729902875921399084651316523080,
    2092703216514017465839996510878,
    2703851174163363357830437518946,
    3984661066270666478376117480832,
)
