//! Known-answer vectors produced by independent implementations
//! (OpenSSL via the Python `cryptography` package; Python stdlib
//! hmac/hashlib). Regenerate with tools/gen_vectors.py.

pub struct GcmKat {
    pub key: &'static str,
    pub iv: &'static str,
    pub aad: &'static str,
    pub pt: &'static str,
    pub ct: &'static str,
    pub tag: &'static str,
}

pub struct MacKat {
    pub key: &'static str,
    pub msg: &'static str,
    pub mac: &'static str,
}

pub struct HkdfKat {
    pub ikm: &'static str,
    pub salt: &'static str,
    pub info: &'static str,
    pub okm: &'static str,
}

pub const GCM_KATS: &[GcmKat] = &[
    GcmKat { key: "00000000000000000000000000000000", iv: "000000000000000000000000", aad: "", pt: "", ct: "", tag: "58e2fccefa7e3061367f1d57a4e7455a" },
    GcmKat { key: "00000000000000000000000000000000", iv: "000000000000000000000000", aad: "", pt: "00000000000000000000000000000000", ct: "0388dace60b6a392f328c2b971b2fe78", tag: "ab6e47d42cec13bdf53a67b21257bddf" },
    GcmKat { key: "feffe9928665731c6d6a8f9467308308", iv: "cafebabefacedbaddecaf888", aad: "", pt: "d9313225f88406e5a55909c5aff5269a86a7a9531534f7da2e4c303d8a318a721c3c0c95956809532fcf0e2449a6b525b16aedf5aa0de657ba637b391ab25cf186afa431", ct: "42831ec2217774244b7221b784d0d49ce3aa212f2c02a4e035c17e2329aca12e21d514b25466931c7d8f6a5aac84aa051ba30b396a0aac973d58e0914722d7215b07c3f5", tag: "61a2cc14c9cdf05f7652d7d22397bb71" },
    GcmKat { key: "feffe9928665731c6d6a8f9467308308", iv: "cafebabefacedbaddecaf888", aad: "feedfacedeadbeeffeedfacedeadbeefabaddad2", pt: "d9313225f88406e5a55909c5aff5269a86a7a9531534f7da2e4c303d8a318a721c3c0c95956809532fcf0e2449a6b525b16aedf5aa0de657ba637b39", ct: "42831ec2217774244b7221b784d0d49ce3aa212f2c02a4e035c17e2329aca12e21d514b25466931c7d8f6a5aac84aa051ba30b396a0aac973d58e091", tag: "5bc94fbc3221a5db94fae95ae7121a47" },
    GcmKat { key: "bb6100845c546b200a0ca7b7dc9f20e7", iv: "3f5f9bf2c73efa4c79ec9cf9", aad: "524b9d35d6368d644ccc57c6bc2d09c241f21b91", pt: "", ct: "", tag: "6e7e1d5a906c252b95d58522741c4884" },
    GcmKat { key: "0d0e37da0756f02843250c4eaa954554", iv: "5f46f4adbca16bf7f65ffe7c", aad: "", pt: "fa", ct: "0d", tag: "f3285f924dc9a0e86a4184821f7959a1" },
    GcmKat { key: "74a94f37035d57333d850e60eebc62cc", iv: "3b8ff50c261943a1856264eb", aad: "7835a9a361c4d1d5d8747c116f", pt: "fe58", ct: "87b4", tag: "52e3f302a3605238b3c11e19f9a5e1e4" },
    GcmKat { key: "a3c432787e026ee48ea4a4e9b58b7ad8", iv: "0884ea272e57d34de128395e", aad: "", pt: "f6046c3f9861eb1e807c4dd3f89af8", ct: "108004c4ac12b9d99279819bc04d27", tag: "a4955c772ea01794ac219b41be012cd3" },
    GcmKat { key: "ffd4eae14188723188e2cb8515cf45f4", iv: "40a5426b43f0821ffebec780", aad: "04f96c5a60f09684c96a1ef0987c45a6", pt: "d55d34d3deb1b33b1985fd7de18d3c48", ct: "03998a1a315fe5cf1906339d1acc4a9d", tag: "ddfd21075d1a3b71b99a67609eb31718" },
    GcmKat { key: "3231213dd5a184bad925f6b7a769a514", iv: "bd4cf6a09e6e523faa21aa52", aad: "", pt: "0185e906e5607390e56a874d88dd26de03", ct: "72a8bc5fa9327fc62d25d25d973170f797", tag: "9a1ca9e8bfde8b26be5c89022633ac33" },
    GcmKat { key: "011cdb046d89d9244771b32f782592cf", iv: "0b428084f501ca418558ccc5", aad: "02", pt: "43cbca0a2b96d298b11d8678b5b22b817682264dbd404ea578d9769dcec4c5", ct: "92493abea33fb9a420553fd7d3b82dcee87b9c18929355ac4fe12007b9fa72", tag: "03512bee195239bef1c10295e1ff273a" },
    GcmKat { key: "1c6ddb8e07fb44fbe7a5b03264147123", iv: "59359cf4678adcd865ab7900", aad: "207bbbed848893c2f2e1410d49f991511e81fd6a", pt: "69a68f078146db377ed472ecb035a66fafe0c2c489ff0aa2807763fc6af2d2d0", ct: "932e258f81bdd0212db1f3e74bc24e99bf05a9b3a44b513f776a69529b87691c", tag: "bc2f1aa00fc4aa2504c95a8df715a206" },
    GcmKat { key: "3cc17beb0d0f722dbc7f834793a378fd", iv: "05b92e652038fe1a73c55b35", aad: "", pt: "94262226dfd8dcb3fcf3ee21439f07346e71c23001aa3209a0be00431c8c82e9f7", ct: "d0329c67af6bb085f2eec9cb91c77eb7bc273e310b810a8db8608ebf1fa33ce739", tag: "d462afd2e503af8e28b1d264236dbbe8" },
    GcmKat { key: "1ef7e367cc5d9128d077bab8df3c55b3", iv: "b26f00758105f5acbc9a7f93", aad: "9b8e58cbe162e94b02c1d69aab0b61ed61efe4d92628b626e182af2d09f42ba29908048450d3422da0e03427421967325941ad778d56a174fb74afca1cfef3d4", pt: "e333f4b7496aa7d3ca6c8c5d0cc45eb450c43c38a51dfc367cc62a75b723f260a57e70c16d9d09faaffe0139a011e32a172320583df3bc77200857006c5152", ct: "1b979dd2af88907e35af843eee1585bc87e2f9b57e58d3287d99649f70b17c71db858be911686cdcd6e8f6d15c06619637a36263f962e15633a955873254f4", tag: "daa737d631784f8b13eb63c1b68792ae" },
    GcmKat { key: "1723d81bd18a89acdd07e56c361bb0f7", iv: "4e547aa41c9b2f87a90d73af", aad: "", pt: "44dfc80056a4d18815f7b564f11e2d0c55f1a1a051b61aae3d82fa5f0d79438f7d13f1a0b15e229be775f5b476678e7912af2c14711f4d8d37886f0373e2e699", ct: "243128bf545f7d0fd35f0b069e20dc5ef90161095289e2daae37f31ba5fea854bb270ac19eb389dd1dac4f23f0469a9c4f5ec9299f9720899702ad711ab36b97", tag: "ae61b67a3f51550b8c383a4d44c8abfa" },
    GcmKat { key: "ce1fba5f1c6e1f7130219d9ae22efefa", iv: "35b9a0e396513183877206a2", aad: "57933fbe0e6fa25d81ea55c109150765", pt: "927489b48b6fbdc80fd23ac21c734fe4ec2d20f528baea1764a0b5eed8eaf1f2675d9f9121d506789b3a06c29e864a59e2bd7efd1cb925b7ad27acfc4d5fd623bfdf837d894da01f9b707335477d65a82cdb28916373dda2d73f76261d91449dc085f366b65f09562bfb1ce85378baa64063b94acf280347b6cf014903d7bd", ct: "03af58d0e004b59256c61cab1683282f942b7f0ba4b0e8ac0ff0dd9e2395c19139b9ade44e6a7680cb967021262d213427e8c587c8585b51bfbd8e26e63fe8e33853f521133c60d809f85b550f5dca034d1b0c4e69453bb2a2d8885fa8aeb15baf592c2c272755a3ab5d5f130b7f0e7b32e5bfcb1a3083523d92b3431463b4", tag: "0bfe0393ca7b7f7a6d48eeb57a587ce9" },
    GcmKat { key: "aa31272725567d328f48da8f8c39d91a", iv: "6c89596205760e4915a3679e", aad: "", pt: "2ec61cf0af50eb28f8d225cb48c492df2dde1216a4d328b19d2c8aca00dc7a17c02b00b501bf166e186b10dddcd8f564252bf4368f502fde5dca186ad3c0ffabd338206f989af344daf766e53daecb5a4b287c99d71f54986fff6ad1e6b5ebe8dbd162be59817f7c923d56f2c75791563b95d92bac10869a1c42e1998358a288520030737d588c9c890f34699eb0c4e4857e0962a3e55c232c2612c4d4e95f46d58ecd39d39973a777783e5b7621d15b94dccf63b96cca4b55a72a3d62731a36651ac02973717611ff67cfa37910a4ca9d168a49045edffbe37e1de61ad36c0dac16cc034fcbfa1557c305f1ae29c9f32fd99cc6d1d0806e13e0a52ef48d6d", ct: "ea7be66440f10af5f50ff7d9afc4f8ee92feddfac89e8150e20f11bb880506a25a8ac0c9e612ff5e299590e0c2ed5c1fc059b71b636ae70611fcb5d19412458f7837fdb6bb31d3552472e36ae73cd9632f39a73d242f7cbb9ee7d4a7af807fd9ab7f8ce78b57c393b857dd2afcdafd0ad12d7448be3d0f65d3f5abe80a82a52222804c0fcbf368973ca3bdaf2ca85d6045b78422a07a5ba0f72d580862fce0c4e3f30a89ca291b43a84e207ffcd08b541ed6e80affe5da886e901d6236a7fb6333938e5f37cb33e1c9668171b3bdd93edc7603a8ca1e28c93e6bddd63008f125c4521c834cceb31e310d690d7da6b132f6c14474e37014b70d3bd6498946b4", tag: "80d65b498d06166f1d93349eab50b26c" },
    GcmKat { key: "277f497b69067bffc7fce4173a535011", iv: "7346090fecbe8b4b344781e7", aad: "b0d2d8a52c8e672273ac7a1170", pt: "f4efe695793f4df0ac192e8d4d687b9fa32fa9aef06d9034a67c4677f4966e2e0926064a4f158d4e87fbad7339ac598077d6002c682f6fdef687cc9bea07c8f77458046adfef68d39f813bc1b395ca103ed55e34462f477c21bc87abc4175efb534f64427ec5815d20b8842e77eb1e496294db0cbc77207992193d60785767352df96180af7983c76eab8fbeec3c98279c6e04148942a1be28a9e3e97501798a3e5133cba0f820f666c7e89ab2cc24a3fd12a14f496503bd04492e58469c4dd00a8c26e5aae981c9c318c604cd945eaad4f7e56ee039444400df3a5d043c5613d04d3bef5eb62ad5738a61eb0e22833f7ae32e7e607577ff2634eca771b8eb39", ct: "2da025850ab13a3776fab8e91f642d1fab5ec16735dc7faf7d4a1304ab696d5fae517c751bf05829d94492cb424b75d884ac0fffe0ffb2898bdd50a99fae243dfb5700d002eb8d9699931ad339ed44549e7f24cc151571d2fc2f03f0535a9dc115a2a7f15c3c6b5b0f83235752bf7f43ad8594521ac9064a6b9756a16aad25aa6aed9a6aa7e39f37b8c11ad95c060213f59f09b4e21b82c506336656dda5b3b6ea5d5ce7d9879f3ddd4c29befb31aa4c39a0323795c48f42f598f98c0606c300a4c4230fa771c9ed7c02a99df990f683fc79f331f3a27904bb7a189af1c6adf699ad755292a839677a5da580441197b975baae0d0ca32d921cdaed3f360e225d", tag: "f55a97e6834547584542e4db1c4595b2" },
    GcmKat { key: "d0c47b5205eb72d46d89417355b4ba4a", iv: "4cf29e5438649463e96f6bdb", aad: "6e1d72927fd824dffd450021b84b5e3f68a42c57", pt: "b8dcbf29057ad04bccdbf9709bb7dbbdda91b4ebd24389471c52143303961f77781d0260d026de51f4e64a4fb9fb9a73c82f422f2fca89161412910fad80cc25e641773fab51369c84d24b24ee6cfd64807742c76a5adb330d4abb4f357b0ceab3d26aa46b2d441b07f7806af6fa53e3f3321467ff74223b5ebd34138eeddf3a90dfc6a81269d5e262e5ccbad8fe1080215f0d186e14545a74c940f38af9b05d9e8988304f9b6c57b321c53125d59d7710ee3be6ea9093bd83e27c13d376014572a3900045baaeb06cd609d45db6b792638ad2b8d3a37353541d09f0d9ad5dca1a617ebd137eb76729bbfc0acf9afdba52acc17d42b1732a7dadf7c829366a4719bca81ee61a645bca5db915fb9db11c2a8add96c286e01d5857d9cbaf43e5c9a3972ce743479a11434e14bb17fcba8b1d760a8aff6ca7de69f0698eb23b90062c386fb8869a095745475a61254e48618c546c984e1e4e4e1c77de4307a74dfaa6451de882a2d9aee3c2579bd934aac7316acb7067074a327f0e60737229c7d7ea44d924a683808f88c8f2bcbf24723e9ceb70f536859db555bbd38ed6a8fb7e9ad937b1e940a4db0cabf60308d6c9928a640649a56b26d54d7dfd0157e54361574165d781f18b523969e01836bfccd54505e14b3f0008ef5c3ee116c3baa6faf3c45d5cffadcf05171fb615a54ebcee2becb01a37a04180d06163f1766bb73da9aba5f70f60c09ea1f2abd8be0215914a7c9aa7bf579bc0949de42d72736e2f8d7be57255571d6202349bed2fb1e52c615450682abad40b70d55816944af412ad39064e28c6b2a2e351906d1a314379c8a2f37e9d6bd991a5c26247803e7365afe6854328c70fc83fa6caf4f3a71ace1da1e04cbf7b3f8fbfba06bcedc874cf487ff74d833bdd545674d0560055f99c96d66ad9e0eeab8b7d5b63ee09c24593e6308ec842362fb1e33b3abda087373c70524d5d58c116fa193bc6b225edb3f8d4d050390d1ac1b7f36fba93e7930053ada6c1f6e9e763cddff37c3e2b29c227665e25457c0a5e92a76f2333accf8abae0df4d2154dccdb2b8cd828a5e5af2b06f917dc9725ee7681a6ab72b25428ceaa6656a6b42ef82bac2c5427c7bf9b16f68cab8c2236b369c6e3965a776adf7b911a083fa464d80c132e32075d5a0da16bdf69c13a53b91c09a7f5b23814e106f8a10bfdf34da371568f7a4eaa7ead780f132e406298a281c9eb3ad2c1c92fbec5bf1c8d568fcdbab8157b61d0a83c518d35c668cdf6a796b0a445d6d7795187dc788c16b270e6c81d74e2b64c0bc9adcf52f7140a36dec260bc027d873ef507bec13643b08fb52d0f5742f7a3ed5f80883db08043a753f2a7e1a66abb314a2165e74e8d65daad8c5b5a81a255393458429a4973c8424e817", ct: "8dd1965b63390286189124d3290ef990a63dccce7587089e8679e3eb8f49b7310907cb065e88ba06764c4eaf6070234ec8d0973d68a0c8fa9f1527db7276c65c94eaae38bff24fd78bcdb06882e1c7e6ec10e86302f10b838345f8364eb66fe3955ead58125af804d0f02290fb0b0082b2e0bd818b56398deaf6448190af0529805d7c390982774e5b9add176bbfa643952524992b2cedd72f21f8d3b85dadb6399aa4fbbaef6cebcf6cc0cb4f448725cd8cb5d9f3ba2c5a1564333c02a567d155e71b54d4e35221e822acf0ec8a80089bd8603e34706fa8b9e76279b6ccf4a4fdc723fc6d79ca431ffef1cad49824ecaeb2b3e668d689c5abb95662e8ddc553931c3d40d53e3328eb761b9b695961fc86ca0e89563142eca373047b1497ea2536f184b055725b4931a11f904c36725079c1fe0d646222650ca811345c63d8623a8cd875f44f25558b3a56fe727f63c65e3ccc819c3f69f86fece5134512f2716a1e3c542cb90f1044df5ece8a925122509e3a76f103149f315c64623ed8bfd0dd7298d23725e482c9bfdda08219ae769bdb23d1a08dd971e003092d365fb2d910679dbbefd9bc9c1c7d29f6438b1e9ecf3ae68fc0bb16432e5671c04bb4a4cb7c86cb2dd4f8542c08faa1aee4268294e442d7433f1ede64300a427dc5a0e8b7333f6a06a19fe24b56306fb1c1dd19ab805e3d807562cedbc0baecc9fe5af5e79146bde5b53d4e1bb60b6221d939396c71a9bfbaeba577bf16dd5987d6533e514ec64289fd382f7deb43170555ba56b4d57818bc70454c906554b0f074a175e0ac4b84768a7c62af1dae7ad370a7f3c7ad7500f870da5f28155f6c1999f5d403f375e5c4a8b4f608457af00d844b33202b816e1db9709b077282a36ddbb4757c45db6e98ef7a0635da72f8e836c943435de9b90f18817db53a30afd30a5e439686e8d9b5708e4ae650b1fc5865f37fe9d51670a772e8d0edc847cd09c7503ca02185e022cf14ff18843e803451fc2c8e52033fe76e0d8b8df991eecab92c14c18be8c726687b991f57883aa8c27a100ec824594767b839adee7e8d9528efa30d91c90ef1fadbd8c3000f53c91d6d6a8d79dd5e33a4ca832c6c06ea3c297a3f5163049ad758068e74230db3f69c6d0549471b8b6d5e69c0bd6712dc14c10dad0ba7c8106a27e421a48e461752a1fde4a45f7d746ac0b47b562c0604e7a20e108e3f17018a98c43bd8062d968392ae590e93a5a07d38d3456beebdfde15e270f12f18f46a882ca20924bee2b4ebd59d01c54ccc34a0fb84f1867e33ad79caac4104ee53594a2fa82a695af89a2e39aa4e16d53f8fc27247c8d9d8f65c9104476b5a4a028863f85a43371c1ed7b347d8f43698f203227fb9be944107b9f73729c4e50b0fd7786c3d832", tag: "118141ecebe4111c700f6c7e0932de1c" },
    GcmKat { key: "b6a9be0eaef9590f786ee382db4e9f47", iv: "315939e7a0c3c4531133f847", aad: "", pt: "5e1f24d8ea86e1055e8056d6d90b8c99b00d855665df4b97be0644dd07c508dc5157b00b156ab364c00426e722df0c8f28f9357757fca47734df2b683c6308911700e970e5fff87706891b2d8a6aa6d209c45b979e54c23a4b984162627e74bb88db1db964fef7bf85c8ff8ad92d8e26d8698f9630c007f2f1026f50cd8211216033bb4381c9b734be5d61251e85a411cc7b61a62f5cb806dd6faa5f1d179835a70b5157bbb5087503a8d7b154908c4aff0291370794c6b48a12412bae4a24b7c01a38e3fe2b8a92e1711a3f32f56d9e98dc427d8d124ac586224b4d3a0de7c463dece3afde7e973b1a350f8f4addbdac0e2dbf4d6ac700cb67f20cba04658c4d8411dae5fb526cbacc541ebe568e1a486571ca2404be8c5fa63300ba8b7bf12ec773156fdbd3992834f5833e58fc45513121b0208a4bcc35bee68a4d9f211747a9206ff8833652096874cbcf537108d93176b9cb9cfa2ebc0b4c9e0ed96b2994ffb31635d563bff207cef0f7859c5a5a06ceb2d296d8f55563ff61940ce8cd039ac0f8bf034b6ba699ea89512bc6a88951cf1c64762f75bf331cfbd7cccbd5cc5e2f6c42134950b106eb04e84f0bdd366c7f92e2dcbf2435a8533275f39634257cae54bed68b6728fa15acf57099b650ca7d65887ce4e89b654f8144e971d1e3aaa96981ea49a30c750e66116de5f738b8e99c64bfd596e235fbf88151420925a796b17f295287e98673637e2f7756c27bdb957e01f4d7742e865d88f3cf120f900f36ccc704158d79652c101ddc8293d33c23968d9a27721706435716931571c22de2e6053a99a4aa454a869bef04df5ac981df21c46449278bf7a686478a9f113236187401e84802c852067ad2930d04f98239c270d41045732a9b00084c827c347cd68bbb51da7b1941c60beb1c2c4b970ff030a6876dd76ebb00d760c6e4d3c2b1fbaa93c1e91ea37ea3d299e436cbbbb774b7a7f53eaf21930d8cacc7e7c63d96671a43076d699c513b951ad0f3a0a3c1b80f2753af9de56f5bba68c49d962a55315fcabe51d582efcd7de0a0ab179f3f4a52cbb566f286ce884bac53e736e47ee6f68c1096c0bf01859e88b3a2a458e26b48f14209db1825156f6a6701a94db0308e62731c8bebc1d583244fa981584395dfdfcd1ccb856440e33695620d3c35f534ff86087dc4d0d2f8a01634956a50e3ccd56517e022f0097758a504e5eb7fe3a6e097d0f987911c6b5c2dd16f7cd5fc7f1985e5f1e8911211f0b71368c7539beb37089d444c1e3c8d5460de4bedc0ed0123840c3c41ef9682061fed47c19e9c3d42f1daaf8cf91b4f9fd9223a42cd0abec62b66a079b8e1d789a5578910b5e67e62ee44b016dc7138decf4dc95f3e711dca17cd6964ac1e15bcdefab654d49eb75523f05082c90b8bd1c57ba637605ceae159331d4271ce3eb4713f1ccd1e8b5ec492464ba3547f864699539d6d2bc8ea1de7e9e8715e4b5bf0981a2851c76d74889d12b68ae52ebc4ce5428c34dcc350096095b900be591eca183590d820a1759ecb5f7e8adb4bae8c5657606b9943321871ed71b23577180929541f94ef87fcb4d9932bc3f4635319e2a732c356b4d9c05f906be364110868567177f68170223662e17476c8d7a4274fa8e344a21d66e632e9c69c7f4db4e4900da7bd8324dda795c1326dd4a339b1608485787f8c75ffaa7310723154771f89604d72b9c06a4f64d926265916aa5b7ad65ba98f9e8690c54f41b1944f211ae7528b81d62f40af5edea876f7e663b9a4eea1b2e86f4f335fc93906062deeb16c81b3b0b3ec11f754a949c60169f92640bc9a5ef28d8f12eb841775f5869e223a05466f428f6a019ec0cf65d966a2f529b15736734b85189253de5c8903da6a9f3305d1aeac4e7ef96b55a1db07fa649ec135381d63efa37ce7dbef28414f8f0e3c258c8fd61fd737a6ad4d31d6139e55335525b9552effa083e4183670af1efcefac6a6a64e89e0e54337d48cc44972c550683c803b1d49e335df6766afc1c12b61cc5427c4714156445e926c77682586fbde8b98ac3376220e00d14618d35c3c8ef9dff030341b43c521b209efeff627382971e04b984f1fb35968be7f52fd434dc22090efe2525fc3b5a41b7c1620fc8effa041762b2ca929365222bd121967784ee0c5c26f33bcbbf2724af7b6f836a4dc745bef403d8d829c7fb559809e1a812b021acba5630e6377c0ecaea1dabd251581a757c9c7efa5b21ad5c2641c6365453189b5e4b90b4a35c2eb7ee629b1b3793f640154644339eb05d21f5f7085e6f33b30ecfe7ebf74106bd75a53d32850fb84f693b2b592ad87abcdbc86e72de1b84756caafcf0245f400b0e942a59f909f778dd4b07e4cc88f1999a34c448b227a46529d03d99d68ee2f2d36b9069a809f69692d19ee7570e4941b8ac32ec03b4ea15c6c7b4d1e589f4ca5ced7119fe0c3e111c2869399609ea5051c2db5f16572ee717844948bca571bc36d3707510ddc2e3220a53cc94ede16da4ca01794f8132afd835c314eb377f8b97387c23343f8d4f0be99ed3933d52c7633c9dfcd57f1889b7c6721a7af755f125a052ff004b07f9100ed4164050ebcd7408cb2f1ce0f6ef92768968202d29c624e25ee3ccf5a74ea520d48d8785d468289b287d0f2dea6b57be5c212c331ada776214b1e9b0faae38e074de1695f2f65e2354f6b0da8452c543287a047b3efadb665c0f773048333dc6935b3c56f7a65bbedfadf0bdf757205f17ea93687c9bd4401164ee0e8163cb3eb15b4d8884bd51a30e64d55b054610c56c970ddcdae09dcf0d7c2c1a62b67eacb32e666a12d4e180a76be01dda1e61f500236b2ab37c7cf6166d1a652c1e76aaf25e38582f99122bfd8b67d4ca55577f9e5840c6e259e63c1d76a1eea8303ab0a1a090848f75c10a2d7a08a6887f7e81b1d6e886ef5059a99bd5829962d30ca33d2ed1df3c02d7a6a4818f0b0a73ca0be41950d154466fe5cc4a445a35b64d31d39263b253335a0417017d66acb2f6046234717e11e4db32b45592f0bfe6a352c484e5bc92ecd1639dde9749fa41c41e7da01f77a8a856c9f19e3038f8e1ac9d5a46d2ed2f5b776ed5a6577a69014a2abf4891dc6eae492c782c53ac82983fbb4caeafdc64339be05b563ddeb8450a826dc2e0d9efa4575de2f48e5b663da2096e96614d90209f91c11dffb1eecbec7b20bbadb135b566009fa8edfd92cd994d46c6a0e370bc357590e84135ce0b33d079eed2a923a5656a4779dc36a904f751654406c3f47848307226e6fc3fcb0e12ec4909875207d0a78763f5ca5c1558e659e79a705d87a4b19b775adf0c35dcfbee14690fc30e8b506859f62cb8f368443a2c3ec1e097b3998b072608922732d31e8533825565710aa5f37ae64cb25c777b5752630286a474e2dfaa3a7a27ee2ea9598ffe682e1c0873509fefc784b527122d24c13e56c84202c5d4df8c2b5277bb803cf0f4cbe7f3ff92270a2d8b867fe537b9c1697e8e5bd66af93bf071b150d2bcc73e117657818ea799ce424759ca988371f0a9a83cdcdaa012790996c5e01218aacd37abb83b27e60a0068f63d6e4436639e4c1f5000faf5650b777b21976092f2dcfbe2e4961557ae9b7f8de87319ea42a0f1b676b04658e60dc0f02dd25dcb166184ba3e4d855e5e7839787455dbe828cc6d7589d1e3849e716241f0cb99c248f353ef14352e1a8c66b31b9c6bb8e4dd9e52d32db58164f60c1c31c3e7844fb114071a924966053de41c8ac3e4bec7ee8478e748165f5563f491f01c207c13877e3c71d52ba4c051bbfe0897b7568be1bbd3f82d7a090980ac9c3746efa28aa351072e1ce6b6e3c3058a3021d0009b1e2e0e1b02b8e7e59de873d9a2b6a77d907d158993baaa738a2ec09d2f42cc6b6af70f6fde116758837bc8da78d83cbdf5fb27380c6f663690cf782a27e56178e0d00e47e54e78e17cbe925673ae3c23a884725c8b2227a23edd21670a554b7ed6254edc79a070ff325ed578eb304f08ac22cbca14a465dc554697515de0cc69d99b391c302497abd4ac796133245c4b53d40cf7cda9beea4c48942f32ac65c596c934da1296dc18cebaa5d27a2aaae96aadebc5efe1dc806f3b7eda86da6c584bfe759c7f3bf88de96e4ce0a06cae7adc0f76a4025f0974089bbb250bff857051ceb89a21916f8cd29cfa8d33842e56c0fa2fa85fcfc129748c2d57b75b9350bb11b00ad5440193c085de9e176243ca394109f370142bd14cd106722a0b1e0f1a85e9e2cbd4540f8258725f062ecbaa452f1947ed81fe85f1cea2404d0ee04688da5f40b7fc9fe16873308bd69b1ef522d2c760e5f2c1e6df72443c1acab95fdef9a314a37dc0bbf061ba4afccae050e98142de574ddb4eaa83cee5f290dba92efb0bc8c9c211b97d8a79fad2de67b2a20fe6cf48293df4dcbb3f2fb43c63562f4e2647c2628fe61f840428707dd92daef8e947022fc07dfaca4f8bb35871dcdb92d6bee48342cecbcc2887c5cd5dea0539c72599648825dec873ff0264cfb8319c8a568e5f6b5e9e51087ee81c4638880df0eb24aadbfe319b00a383c7081fa9415af484d0d61b5e583f4c25e8921623ffec6d3bc18d0f09cd0bde622c79ab84828ac4841d15703c322264aaacc7caf4d709c7db7ab184c36ee1a8cdd362472156114e87191aa493cb86d8e384438b3103dc44e9fc3bd0c2fe597828596f6d857b0cd09b0f165aa9d034804df78b21b9fbfb8ce85e18d27655b53b76337208c10cdb268ac068bde12c7c0ffaabed01ebf72f2501971b03c5b6d9bd48b8b356ff3779bb636d09cb3402872f3a0750170420f0d917f4e71b5dcf99b3a5f6f93576f51e2c98d1b2f08d873a2d9401bcdf45c6f908eab125c5245d1f247c8075e1653f2eafea67b72bce3ce1d8383eaee59c4ed2be17fe51e64c1267017927a45dd610f63972235ddd4d73ff4761135c6e48859a1207b744fb0a75120ce5a69e809bb7590ef0f1ce3c2af05541917eb41286d6b6fa475a2ad6090e746a191406002dc7c06d3efbdd5958a6dd6439042efa4db445dbc98c0ffe1fa13d0ba6dba5eb1e1561af1c90c51d9f299e507e39abc9207a28443ab29efcbe6a6040bc38004e4bc76847c43d8999455e26ad7be500c4774baa55d752359f086638eb761cb44ed74d9264f86882d4efa2a564d5a2de601a5303dcf960b05a918e5396b97afc5f5e1f2b1831c22a2b0693f20e0b283c83139c92bf6c93f636def14b50b90f8228729252c3e4d2f42c3234c71c7b0adfd6385bc54e0e23c85bc3365282cde5e79e05c1d252d6ac06ae129e3ccd8e5d2625a4d6920d77e5c20e0b50748560df3fbcad4b3912aecd0b854986ca64b9221bd49ddbdd548d9931e65cfa13186365f0e9bd9205f1b8a2ee4793220f0d4cd6ac8887bfca5c02f7725e00b64d3b17ff1f56a9aad815afdeb22ed3d3a21afe591144c521286b51cd69392a7dfcbb6689e7f41a8939db033fd5bc96698daa8167f358faad362b493fba4506a895ad3d2b37814c79e2c6f3f63a457c81c5459e74ae043384536a54c636a7367c5c568b15235b2aee342a681aca06e3b56504b5843eb0a1f9808d27f34e991219e7f11c992b4295cc4707cde895c1d7a0f5c6d23fa24d4b9946bf4d032ec71351184b27ed654315ab04b00b85c92c96439134c4a8c7821fd3e50ef30737706c011f5186bb28df8a02cc90e4a2dc30a654814d94004dae0e44d91ce3a662671f797ec929b7db6c189b303900a090dfb", ct: "84029ee5f5f840e7d60a6521d746b107e74eedf69dbf0d50b9fa2856834c17e82f21707f106c835ccc891ff68fb2d5da4b788c0e59e32ed5475f95887005a0fb1b5985c1b4f7731b64c99201705ef51232793be07b937b3aaa7aaec488b029bf2f0e5ca13857c49bd13d82072dd69241b127f8234e9aa85e28e77b330f0144a925a5f5e4bf34623104fe723f224f6bfeccdc27cce20d74f083ac6e60dc4efcfe28ec7c7f959f7354111d9fb4a065e8837873a362ca8a9964a66e7835cbe3c4b020f1df1d3da236c6cbe18a323a3a3a74f07f18c915f13739c61b5cbfdf4fb9b20817bdf3e634e2089f1c3ebc373ab9dc4c3a54901676980b3935b347eaa161f0070529365506ce073eb0388efa197a3d09f6a4b7b8078f92b5ea65f6bc654a3c4b6c78a733b287966530ab7d5f5b7beef9149f0398810a99ac2c8050752ee796406c02b4f542c762058e6e105fa43c43d706eaccea6ab0141656a74d64e39417e33478a10f9351778ae2dcb9de838084bf212b8f9a622c1d76c0b2b51008a7c087c4997a4966de60bcc9341fbdb2c7c184dc92f79d71cc8f660b8afdc594992eac9034b377e8fd7252d6201ad79cc16c60fe675a64b7305ddd9c3bbf9a4a68c46fe2e2846b54b5cdb70c20bbc9b12df1b0b7a5fb189542ea3f508641b0cb416995ecd9cefacd9ba9008dec9d515d91f9af9c570c631295e4c219ecd6e8e28e6f15ddb7f519abd63348f67ba7e153f10d80977655e2281f21e01427275deea48ef17735aa3b3550a71a1f30af02fc368ef9a2b9bfb61e8be56e9e7b07f3ad454883ad8d5dbd325be83c113f392e404d91a176d5ffc074dd8095f928f2d627fe00b1efab52d5495cbcb40814b3d42877a21646da694b4196b165a665f793f6b82eb8e8dd45bb5d4be15f0af971c0986777cabcb405173a620f88dcdf8a28976a8016f563dc707073d137026a8d06f53c3af92d3cc9844136a34647a1500b6f35ff0049383be23da035e78360882054654fe8974acc0c0a4ef3d510954ac7a18fc0b6764dd336f6cfb42f78c350e23a681f6c7f2b48a5894a475bb72ea9dc359eae7de6c27083847c039075f9b782b2f1e554ead413b6186255f60afe6647b5507e76596875de4c852495b4717ccfae2271ca39c757471bff5d2dc45d454fa525132f989a1a6ba1e01889c1d1ee20a408a304ca928df83db7e83b5e788e835cebfbea0b19a105f92650c97e3b86456a6d3096e6dc3f95217a7ff346e4fa13626b23c69e0f89e6d0bef95a8ba40a4d05caa03ea1969502d219282187d2a32aaecddb284ce132ec75d29c84214dd1cd2871c46c8148862f7c7c2b67e2e63f27583ed4e5cad52036826cdd4ffdd604139cb591bed45c18b5ecea0cf8de858de89f5f33a559024c38b2c0afcb76a3cab55429a31c39824f7b36c3ec0eb2ee9ab500cd5d0a9cff284f6436177ad2c144501649fd107dc719363137d484645016ce2fc5a04cc8190b14d2656bc7a761b93127e8bc308822e1fcf25555a9d81d910baf659960e0b3c3723f09c1a622bb5e419554d8714bfe988ded45f6d1596103ef14016951cb6d49df5c207a6299744185be68bd4c56421b553dffcc603c4ff253e5030099f4e3b652bd97cfeca35e8be73c992705296af533022d5707ebecfef1197733336a313c8aea98accdfe01e19885d64251de8b6ca350fc16e178f16ac78189f303f4707565e2fa8301282579c74abac43429b986865eb221c51f51111363cc91a03a73cc178076931798c75c6879453ee10ab1789ac66d6bcc26ed8f66ce77afbeca0f9fbd91050ade9d13cab01038d5013754e86ece7c588e4e158bdc40684c9b176cddd83dc32411cd772f1a992860be1d9e827e333bcd3818b55014a0905a47189087a454c06e67883595632372469778ee5aef6582a654b73df2e1e0c0a139833ab247b8326ba78be71701787cf3731379fa8e0ae36b98b9244473526818f667ddb72e8365de3cc2c3a7690a106719bf9c77dd855233102e8406ec8e0b012413bf9ecbad34d2b8d3217e03890592984e0389c2a23de9f410a3f7b6bb114ef6f41f90d0c1848cfe446dc844e2ca2b8b867c25279071e01d3224f69cb3b6c1bfa9a4c7b382fc1c83ae864bc41059cae95e291b0121839202aec812a083de3301a6da9662e9a09669a40a5b5ec57b5c0436d3c2b6a50a401fb47f451dfa9a542d37e5de00db210a418839c37549f88e3852ec5ece028fcaecf68c633fc92368789cfc442315d508849001368c04365755935fa1414e1a6d7e0ee7ca0e0e5d9aedd8cd7346b4e29f9fe93271ea81c88d6e2bcf05505e68e1746ce0d9367c8b3c0f9290b6e2aeceb93d07a65f806a0018c9765ff9679ceae4430e5c321329a23dfd3c08ca6758a140ecd9bc5e7c45935b78c320d9ff19b92803488fc333a872da67f7622d0f669ec5272a3cf2de4fbcc2f9193890f66ad2d4d3cf6767592ba26ca8bf15557c4eba44c0bfe41276380a934cca767b10d78a838cdb1b451cd26272d37b03106e6acd6468d7b14e5b05c5a252cac422e076374ec655ddf1bc0260fdf359b5e3417bd5c389d263a74ceba235bbbe019b8639562b8190ba08a9259d5d7517b819ad2e486fe913b517fb239ae6298302b0bdf2b86a368c1622c40383d295c6b4b0361e42c876837168b997e238f6c09a04d9c8bab1a57d36e988c34c8378447e3dc61bee64e629518621f3208eec29a2c01f6fbadcc28500be32a8483f4d0fef35a3d666b890383d5c9cb62a1db263b9aef75091e6e1b5d7662836fe124125fff7ce4acd9b8e8609f3a5e29dac3d55383f9f323762cf669d1434ec35b7943b8205d9d19ac9a96f26e8ebbf48d6c60028abff20dc842da7b59291fe522b79d1de1803b08fc636e427130d3023a935fd3c6d332cda173ee4431dcaf3a1bbaf8e5921368b46bdcfc7b573c77e927d35e14e4da5a761c681774a8e22fa1c6413884ce487459679f8d414e7b7eb93d8a2176b54eb543509582584ccf95647cf8fce66ef2be39000c9cd624a998ce3d6ad1c0365d96471bcefdf9ddbcc27fe739b2988d0559af691f9d18e55db8c56308d47bc7a73bac9874573bdf9cd27ca943e09f56398edfe223cc92f27921ae93f57711bec2dfa247e68f691de3061b5a4a89beb5a9c78b3332f04d7553f6817e6034b0d28051d66bb298d33ab67292e7e5d5975d4731199b5cf7bbfc25af44f014068e66127830e96010d05bf5925707b907023b0d4e2a9058b6967886c7f5da1cd06afdb41c4014c429eb0d840a8824c7d1f27dff54f1e832a2024c8f1f5ee8afd3c4aa0601fba9bb7766f26587770cc84dc062141f0a98a1910fe9f87e224855c874bef3591f26e007943d37d27980746d17ff8faa39cda031280e0afd648f7dec72f5ebfba0d1e8511a56ae02112a620dcb4e50dde16ffbb7fcc9635d4ed803b411b874dad0686702919e26ef3e4498eb3d8b2f62986b3583415efea3b38bec50371d89fd2019c7e92f494bd8ed73b4a73d3dc3619bb215798e0fde7e451f99a2e32507319749c83d2d2d262cc6eb3ef51683951d1e0f3302e46f22e8797df9f60157edd42d00d2a207b444cbabd2109f808660c202ee7a0b1de76189bd98274df3dfc38fc439c9d512c19de06f28e53f654128224dc7db27b3230287c8f252fc510c56aaa9b10d722444f04568bb09d0994e6312086019dbea2057e17e4a01cf3945b263cbd263b8705b7edf0c0da34083d48df392cc954bdd94a2945214b69f73847ac1635022ab24b9483ffc2e20c30cfbd83006204ad0c0da92ac094f6a0473784b5420586993309d59023fb857d8da36636eb9b67ffba86defa0ecfbb9cc7798fc6cfd269eccff47bb3bd723270b32d52a29fdd35a3c27fee555e4d60fac12272f0bb2a153a43369038aad09e14959cbe4faa26f8a846402bee28cb994d1b2ad3e27c9cac3ab475cda6254357ce61dcb63f02aa179352d3e9479e77cbda338c292be026b7ba3f6eb361a5628c35e00aa931672539f64b080354372fe3a827a53a5cfe9052ef4d846af638fd1b0f311eabc01c23e2067a03c9aaf9431b185eaaa704426409c4922a546dcabf87eefd0f90ea013ce802f3d75ed8b722ae146c6245f78b23afd3f781f691de4211789b9c53a8431f3efd2c4f9f88b09be2b596885efa0958b891c4bfa90fc13e434786ef2859309557dcd71b724ef6f90369a0b2c7b5307ad10d7d96370e5e599c7d4abb4a66112908facee3d3c6972b383dc681cd7fa5b89c4245601ca87ba953574a233ef84b3c35f6e9f6afcfa2a585ec22b8fa905f197295510153a0f2c3270094f4f8a9c98c02a37ec4180d02ef076e26f239229f5244aa7e71ca289fe8e86c054f9c1e2b390ca5eb1817fb541fc1d3f0133c3e9582cf83790aa19b44b720c6c135f8beefb99111b845ae87332ff54ef097b17247a446b026b29f64d87f937a0bea4743a490c286efeb3d8ea9505d7658c38fccbbef78ede42a7dffc5d3d68c96bb4d42d0593c9514cca0e7dee4c81225e439ab4b9303bbd8c98ae364081464e8ed2ada215646a177d59c6590b5274520005acbaef5d0db0ae33f47128ec79ca6eed102839351c93fc2562c8bf8a3cbd8885fd4f430dc6e9d00bfe9543884a5c6a32fd12713865850c58e6b043f5bf1774b97c042f783ce808e25b2c63259a0eb306851eb72a23ca517ca26deceba975d3f43d7d90082865551a69697e9e80d64510696a6a12f0833b0bc3f1c56666d6cc58ea1edec63e4f0fabb76a02d7ecb8ea3a8b7283ed0784c4ef0b27f4dc19fb80dad6d762bad43789c531111fb18ba00d3725cff58ec2e469e2e9ec27a7023ac2f3e2bebdf8871d737057c8d424d9b203229eae9340ff3ebe3723d687c3f5828de47bf1255a134cfa6e628907516946b554b13c06d1bc7554e544bab876cb92b4c98b35f2d1ddcb3557d91e197c1966e386495026030953b6c01e478d0fed104c19e5bd482891d81222068f9d7c82cce1ee0fb165be07841ad99b2a8bd4a6bed947c16d1b4b235ace5713c1c3fd0c75f1b4cbf84736f172b399f8cf43c8fbc046cd4af416865a916b0e26169fcefa6762d43046a8c67a9f0de9ce3be8def3fc36f9fa91cab5270ecc53c9b508eefa53e9bbb142eb6b5db6da8fae383c0923df549c7994a6382c95769e031fe389fcdbbd273c581a8152e2b11e1a26a12c5f122d067fc2d010319fc406382ece0375738067fdb0b69af6733cae05d13f13b64f3835e386639a07ba46e67b5ca5718059f99380355d627c99c37f5107e94bdb6fe955a4352b7fb983acd4bfb88ef035dc7f46c65dc4eacf9580fc1510f6bbd44edec19eb09131e137ca177c22e9e0d4eedd75b2d238442e07419a5ea08116849640172815bc75e0fbbf35ef092642e8ee7983ecc85fabfd37ced6f6436f66d92bcd7c72b9ecf5d296424392a3c0d89bfe965f4c862549f1407085facb9946bcadbf80d79942db97e5667719a55e06d68faf369148742260067e2853884b0e7a043c2ac21b7904df8495b42052ba8f821574fcaaf09957dad6a8d02ab86bfce29c67a19e782241c80eff874876b39e03ec56baa66cf0ce78849239d6a5f21aeb25aac058b78032ca1f2d6427510d7ca5ee183d8d68ddcb3effb394f0fbca846dbde209bdf1a1e99889f9fbda5ca0e49a6ee072bd926262efbf920a3e526655a1c5b32d2c95e8fde4de227fe895ceaea9e6a217da5a5c6a53df7d4a12f01b4318c6ff5821d8064a4864d8f317f1834d1", tag: "f743d14dc2d0ccfd1131fbd2fab0c69c" },
    GcmKat { key: "f91004f13532ad0ec755320d9050f60f", iv: "220d0bd5d156597b041ccf5e", aad: "40908a24153006bc6cf886ac9e0df32c8ea0abb2a6e6b6a4934a68a0a7634d8fc859dab30a64be9126eee9e2ea3bc156b3987d217e342c59f72d885c305261e9", pt: "f0fe3af62037a3990e53d025f5915f1d07a0651c581388dfae6f98eb6b076d1d034a6341a451c615982c640efbd5ddf1e7fd5b1568763567b4b5d9be0629ec01aeb6ed22a25ce27051f46984a23dbe297c4599efb9941ef54bc428f28b0a4dee642a07b8135825d0d831bd74d6a9a926e623e9557eed4fa57bfd25fcd54b934dedaa3c1372da56c80a135f1e2210c761fdae4e66d518523f5ec15f4413ccc4a05cd04ff13581f5b6ea3359254720e96d1b24f06e4bb9ad4c7c66930cab1cd3af5039fd72257d95823daedd6cb05746f9a519150dbe487933358fee1cd86f0ba850aac03f37be3cb8d69ba5f90f9613a95f325a0996db073c66beb1fd135b111d97c0a8eef7edab121af86801b72c3b7082b89db5222d6bd7dad682b8f0258c659f861cadac392d23808686192750bdb70afd68117ea5a7ebe2769981f7547f3c5ae6ca9c36e0ed2ca6e22b9f9907f63e82472919e11d5f1602c0e2b5e89c59d7de08d6a7fa27a05c8df62a6c142a33c5cdbd5295f645a2a7d2d5780879d9d082d65e13572af930bc4f19ace7a817f24191432f86f31ffcdcb99ad3d9d4fac4e57d2f84ffc4a153142c1696db83fd966630bcadc8851bf667ecd735d68ecd1d235e133eaa807435df5955c577744417fbb5e70e3e17160ba56c17c7ce22e16181845ce2985b41b9bb20d9cc8d52e5acc1a055015a40fada9ed7a606a1651e70e2050f82cd8a3f88b92fcef1700e63a2f7decf48e87b0f0149d7a383ebf431692dc164dcdf95a64aa20d7c505720fcceceb1c6a47eb7ea7cfbec8f203bc22867737a75b72d7def2b45527925b6f5850225efebc8adac1f4ad11916b355bdff93476989087abe4b5f03beecda02132c7c2fc9e297824c27ab83181a6ecdfea2998d1e5dd1b7ed790db6e3c86fa95a1805e56f82efd7fefacd0c7a560f519b268282c296fb48e4e3caa11e74a1dfe142dbad283c42894fe331b8dc7f2ccee2ac5c5f7a0f2f289d94a57ae5b7d17d0d51379de764ad9964263f8d782078004e4e280ddc76a67439fe18d285ac97b0fc7adb776fa8a1eedaf16cdba94a39dadf4cd2aceca1830458bc9f881bfd53caa3e8b8f4e8fadbfa25c24e526652e18abdab005b90b7e03a6b7c061bbbca71b5999613d2ba27dd5d09eb61cd3524e4dfe847bd9bab3a3266bec2750d87fca3d450c834957ce69085237ff908a5568ccf167f508bac924c48baba0860b5e650218d7ad69155a93f6a5e9f4e872f80e6213d9a39016d3a2f4c06bd47d8fec677d425b4beacc0b1c76a97a0c0886ec4e85c82725d17cac2fd6bf5d94ec8dc523be8e5bad0f729a7b0303c2cda4eb5c2ae820114f33c1245cc5c0402b83b833daf27c02cab09e595ad66749d9f4cc27728b4db81b42b4ee25d81f20ef063afd57145559600b3870dc7c8accfa0e889043ea0dd9ce52e14ae83e612ea41113c5ec40a114b6db8dca67df8c0eb447de69d4e5578dbd79670d4d398fdc9a159c2923407e6ae2b91434225e1d725a9edf0c93701b88835c237c0ad2ba9385d3937530d46a573aefe47f2d768e362f3d1de9c36ce6b5a2f82cf62542602bbb076a527e30efabd1e59b2dc406c82926806f4bb99fbf726048d9acb6e3bcadbe63758beacebfdccd1b5af18f7315ef59af3a3404762dc62bcabbcb80e93e56fe20e46e7bdacc64f8cece66bcbe25dd66df2e5b605d58cfc8cbbb9337d6361cb5458fcc4ec4411c359aa68a80334b79a2bcda970f0242c3113c105e4de60f26061811107aa9110222a93b6baf7971cc2a728d971b4afc4d9ad912ecb729161facf69c3c199a93c5f8f4591a39e77c6eba28ed416e3c1e895ceb0fe967767af9a2d41438153adceda38b234b3dab30130b0e93675a686a9e43c836ea8fc7d6d1d8a8a5fc8d39e6b23cfa0a4b5176fbc881c24a6fc0957e6bac79a95e3af8b0e7eddf231614edf58dd6077e83d7da9f422222c20b875ac5dd56c6630327fbf6f996b3811da199432579b2343bef15ff13a892ce5c4d7ca11e956921da978ceb1e91d4c590a5f70a7601f191dabc1b20bb283cfcd6fb6072de21dfb67404249b3bddd7d4c49b4f1244c10c7a4969936d9d3da6c5a6ae7ed673672533155c1dc27fddee6899bfd0fbe66ab15f1d7c61bb8f1fecb92f3136e69b056f86d26e2196ac31910cac841c0ea8e5825bf828d414c5d71cf371df31de4275bb24b61aa999f7203ab72be826e3e39a2b28cf8131db93d01b1a6442039a356508ba72efa3741847547996f1bacb8e8e29f72b396ff195f2e2a9f6dd9172b61f70748cf9c450912f2c9d8ea289dea52a5809ec86a991ba0a317695c0314776186b6046e8ab43bebee184c20aeb050274eb25ec2b6b35b7f1d28e39cace456346e8fb699b5d56dad0b80ec9a9eb9865cdfd02bb31733c564d00fb0dab3c209f02f8f0994224bc507566121bbc64bb7ba16888c476acd0b61072d5dbb4549b4c50240f7f06a780538a5cc8a7b9579ce86042b08020f3ceb0d9ece80f3a8e8712d1223695d1d72402ef8c0842af63ee2ef6d66bbf9d3346b2ebd345d2b161908d2e5813c29e20a70de8655b59d05bdd125fbfeebb960c54275fbef9474571bfb43f4e1f0da26579e77171107240898b47f2ff5831a50000f73c8253e4dff8d638ad8e7337da49e564d8c203626dd471bef5dfd790f391c54cea4009c4df94235d3b88dca318edd117df42c93c1822de068bec95e43938cef1b1a0b3a26d91a80bb027372eeb1325594b10060d3fc1ff81b85cb0e97b11dc5a80732fe170a42d23cd3b3333cfa905e875b58331c193db783c95343375dedb1848875fef1889f548e48128c84c44c5075a04af8c197e3c703508d6489a1752f587ef54b32cd5e5999acdbe79570d9b75550b596f37a6fc0552f85165266b41ea4cd7d5bc08474aae376499cb883187c780d4bcc39c62a40c8542b207f2c3120a3855432f9a5214d4844eeed128e84d09172e867828c6dd32d0b4de1d823d3349655b75a87c0ef9d8ad1903222f49ff21fe6bb8d82cf76c84a557dddc1c08511de69c1346c990fab536b6f06bdf88e05b77805f180e283ad5b50795029e9d67e23573aba0d421a3c01e9e6d8d176b35a2da55f4d5bdcb23c12b67a511962b5985cf39ed98d4f23d6898774863a9120ae93502505e450c7c5341a7809b19048f20883bd50073b2492e022680c5b4f11e86aa39669555530dbe33fd3e405ca16ecf8e70f9cf3ee354aa92689714b2abc2f5208402417308593b18461f1ca06b5d86c133fe020bebb5eec6c0b2073a31cf65d227be4818bde4c03bd0132fe29420842a894bbb5e883b29bfe1a64da8682d1eb1950ef8d16b82a361b7da2d3b5db9e305b047443c22b10184bb392cb0908952f02e4665cc1f5dfd81b9c49e23b27c9c0b0e32eed95593d7f2da3f7a4f9c0e0b936714f51d9e6904fc7a220d2fcd89191351effda3d2477a580d3999216add3eeaff3ce8d527d16b42ebd09a618eeba4bd92ca481c57cea204eb7871bf3a37c4bd76c2ff5fb0d40ff857834afca81d5a98abc9915cf76daf60e3a7d97df12ceee91ac1664bed49ad4043a93074df6860a107e85f3dfe2ffe4009391f047fe155a894adf7580c06a9193470c56c697348ad40baebfbbabf6e1f80ca3df204668d0ba44238c930a977d2b69a6f8029f553718ec0e11de33ee7c4bea6afd91de56c318ebc586dfce3d29a64407b17e71947a0841d719132d32c9a2854dee955a32d6281c3e3e7a52fa823df353f9e743a301272dce3bd638b31cb41a50c5853e87484f9aa71e040b749a7c981d183e2ab6dcf692eaae00d1bfb98e8b246a3ec69ca5a8201745593ffa60cc291c036afcaf160983fb812de430fcb8e7e6c40b3570c0c7ae01067d5a501e5e2689134fa72d64c57203171ed5b4775196df360db68fd723eb80deac90995fb8b619053f84ad1f040aba79fbb9e07e04f0721f77221a4fec80e1b65ebcacad7dd7d8c6aa13233b5adff1b5f00e615a8de61de19aade06bffe052da63edf7cffdec822dcacfe631e723e4ab9b3805b1e695219dbcee64d88953d4f788796d1b4337815321cdbb2b60733aecbada0ea7f22a47707d703be65bc24bcc656d8cba35b87779f40e2dbe037e954ac19e29d8d79965234342ac738529dc6b27eb9237af5f73acc582bfac93f5779b6d41b5f1b0769a48b19cb65eae9f50f6b922f9eff3bd05fdb277886e2291329e4be3f25d3facda9ff0807a4d18c2f662c9135e4d65b7f5ef1ba234c0824c25ce1a47dee4455cd38ffdbc4faec16005aa7cea2155bc5c64c80b6aa4b8dbee83d6c42945e61f8d410282e0cac195dd4a4e98d514e29cbce62b01a1395aef579c65a2d34a34c3384e3e9f06c199bc3eca63e13cd23c3d2f5a1dc9068afe18973fe2e3c3469bb96393b1687b129efb58e797abbb219938b7c03cb1ccfbef7f2e9513bb9aeb2831180a33a2326684bee583863c2040ddb0ba65f412525a6bea0dd7dec02237f256ae839f47c3a08487a2b0742872f1491fd29b8883c2bd28249259f491cedff9ca3e01e6c4e4049d68fb27500093059ed08303f9d1f034479799d948a39e05e80d164686862d2c06897a6311576fc18810dcdeef10ba0e3a0497209beb377501125425acb289ac32d235bb7f6c86bf7ecdf9459cddd21e5d9d14a7b3bbbad83c0d2433a28159438dd85cda45da03230eb67607f6497652d1a55dcaf8d67f02a0e90e22fe3d63afe37a71ad595dbf55d11abd29d6e5cf074cb4f2cc339c9b6243c8d85ebb37c286ca0236052b564fb6ea03d195aa77cb4417277d4f9882b9b979de95525087a5058a2dec56898a2cfd716896baf8523855a6e64f85a848da2176a5aa65e259bc019a5e2f0bda4c7c56805a6db446ecec8878aa2ff14af492484d97c78e2a2fd4ecb8ad5d837a8e971425dd8c8cef35f1595847a65aef57c9957dbcd4eada0653b6b7935418b670e1c85761613a8bf1e26b54860b79e6c19cbc70cb8ea5faed6ad3ba851494ce34b75ec2537222f126ef32c48109ba0636e3a8b73fb8ab3d81cf2fa61b0742ab56fe78754b5770a0e4d2b9fd488d60d44470cecfc0df3dadab5c114d78a85f0e8770ffc0bf9e38e839dc35584f410e31fd54d7c8b208662e71f1c8bdd6399025bfdb54e92f8cf35ed3f6432b96ed53700325aa7790c5b75245d0263a87f3815d62a6a37b7ece1406eccb01bb1e32428af7408b5e742a7d8cbcddc3c14bbf57ecee0744639cdb4c9efa9c4038b18c33ab38ecc0462c1d2064cbe4a7a60d8b94fb8f952e7bc9025d9e92c2b680ca32209f100db1cb696c5b770cca7a64b5609bbd0051b2e5439d2dbaa3f054302f15498f30a581361d53f958c0d9424c0456fba0de391b190522b7ba9036e0d64df6466cf65a4d4b884bc31ffbb516cd077c1fb6f3646eb7b6654a03a6831982ea4efdb0c48c6faef078f86ec3903b3f80d676af40d5acd8d02d663a59737e57de121a1be014f82c360447a75cb595bbd7a0f0a79a16ca41ccbdc9e7c9b8b55394d45a3f65df1ff4705355f8087a41786624b17d14a83652a44d8b5a51c4d91bf2927d0e15b31beef4eef8cf8ba300505e56e0d48d61eeeda46c49487db3f7ee4a87fe02a56e50c4bfe094cf0fc54067a208c31da6f778ebb452abfe6d81bba13e25a0439c20e1e8aee4893424a68a626372d15c4ef9d3170356f0f5d739373b5becc2498ae07be6678791ff391fc112ae41942a8d3668510b0718d35118c7a6076b84d39485a5ee9a23e05acb8b7c6c8ec604df008c9ca70896baaa926e10be11725482da6d5d28c709a5ffa5f69f857d58fd3cf802aef8a0a6ee44fbbb05b10c740bba58232558ae40879e0d0f291e8a24c491b82d925c989fb8b345f27a51f02b0f0e9880d6a010b4a616e69d607f1d2ea3f65ea7bb9d40343fd09e4626257d9dd50cd8fd91c63253b29d202cce0f8907b3307d7dda21f90ce8a80840166dad1cda687e720cb53988e20b6514a2aa772528b9a298aaa29d261d777acac2881b0cb35545166c28e218d26c6f2801b952e5d9294878ad07ca04ad8c9b3bec577e4102269aaeb3f43a63a238302c4fd8373c12682261a54b7427e768ece418a393bbee501d1a97e38d3ef823dcd5218df60dbacdda3bf555afc6d1b1c5d2c056755789379666cb10d79ec901accc7c7e5c031068268349b25daeabe9f3717505fc2c454da706d73d8f46a74163cacb14d10e6eca12f04b5bb7e625db9ab50265716aec9825dedcf6fe34b7a60a573fab8561c5d543d427807a68730854fe3b38d47e80bd7934ce4ba9fb18161ef6a05bbf44d121b2636730ec0a5d40fc6c9b77909fe15a07558fbbeae1d522d698fd70327185a943bf235c7a4c3732148efe61c7d583751abc40e3f2c834cd22b44aec91719b09e579f2dddaa5a650ef1ba34c030d4e029d09f3a391926c693eaa7de6611c2321e30cd5eaa46639740c6502ddc1e272be48303d62317526a20c098b7c542b464c83add67cda483118a4500739ca9cdba49880153f88880203b9ee7d2c7108da8b31f160068d961e3fb3246f680c3131ccbe48e21e799df37588bbed1907b68f1378d20a479abf6ff27029b4af233f2a5d22ed0ea1c57de2d3027be588e4660f845e45ba990d6e9eb85f393377e7a8b49cb3cab73d12262b3c7541708906afcf847658d7598e2f2c3207ec71c9aa07ffcee0194f00e56252a63facd1a07ff3e812f2d882c351008a83aa731b4a3485a442d1b41f4f09d93a89620d0ed20933e51aecff340684bae427285d8b6f0118793c7799d1c483ca18abc02e0ec79198622c493c06e2c30412971b7597ff8b7484a2036ae46210d8c031620a4be6e0781d142a8877de4765d9a02ff2cef109a359bb4b7ccdd64db93ff75ba985be2969bf7250f1c4aefdacc29acd014acc3ddbd087ee54cb3fd093ee51fc39be70f7e8e5213a8ef2d6a66e4b6b1424e668ed5117bf27c83b5ee4e6fcd5da8e213f8a2b5d92b06dd4020c4c35dac621f601623f67d2025dc1ae1aecac487c2fba05f691", ct: "8e3a398139f9a2150bb664791b14e915643ccbbf762016260752d26b77ebdeb0d001d05bf4543676f5a1fee80a4803627d1cd907b7b604787a0bb26bfd2363a215ff95d53dd0be4ff145b47e129ab9c8fb1544c595fac701830309220837030a641653c0acf2322ecb04e6af08ee05b3401a45e6a728d46860a23740671d36d17c36cf2e42f5fec32af0ffa0c72c59e750948b29fdc582b39f080c5a4f1ec3a2dc516ec9c3fe0493a904c555f43154883e163209022dd19792f7d3d2ba42141269aa828acb4d2e8bf28c62cfad4731f0b29d249a0efc307c5149a9efca1e82a1037c23790ccd62a918e80be4fb041d6ccb903ff6d592b0fd3c3f79822d75837786913447a79505ac1a9657ecf1e54d7f790c4a727a6597044f080fc9d685f616b5d7f92eccf62f37ab4b7ec8ef897f790e477eaff11ff55ebbe81b60b41249dda6fde1de88f4cfef9f5c5f3bbaf7b0dd5c30390b2bd79549b61f05d28738b09d1f6e515220ad77b7ef18317818d0d9bfafb46a30bab7b9afb46a54e086bfed564c113f853e107fbfa82be7321dfde3a138a233573300c7e2a04befbe9d0bd5e8c1a2d26439ced4929678d1e99e4973debab15289b8b24f91a6fda939fbe1c81b0a175ed0d5c895df1c754e68fca5b5c756978842576a1b3a5539765753034129e8e21270066202996e911fd3d37b1751538def42ca0d5a7d7eb93bdd7684ebbc5980193710c90cfa0fc23be343c181d753d0ab29de22e7237eb7caaa8863a85bd95a47eace2d9d614fa5f2e7a109e6651e6eb2df9219939927e48c659e6eede3ce991aa6513b4009abde8f989c51e41bdd4e6cc7d96994abcc1ffc231c5d1e93e07c410f2888d544cbb10278758df23a015fc0db0dc93497d88ad6ba2b3bf75c3ef08d10d1309acef1db5d10447f786837ce4e833dccf8d720dbe07a81b43cda167d39062cdb3a049bfb94818decc25c7567b508cde052729afa5f24bfe9772497fe4e721603eab34ef5c79507b792d5740587266dd00e609f8cc7e3f676f7241b182364f999fde57050a590b8e860b70044751934cb54a0844c209a7bcf803243a47c5ea253e70be6b235d8e484aae86045968ba5cb4581c8a7fb14189c271b5425bdda8c6f298f651a821a2f3c6b6a3e94ff7b515dc749530b31481300de719174a928a1f02a4b1c9b2871b3a5c1bd27fd31136c6b8d16e305d9151a4085eb882e6a2d69c84ee35ae9c78cdafd58ffd8d8f1446f4c0a66e0555a7140f6c3f5663eed150321526111ddb900c446621fd90878c26cdf8a88ae95e056820f841b7d484f16f6676cc008e6e269226445870c5eb2901dc0c83df5b51ec447448f10bf404e47e02004843abdeef28b97c63dde4d9ff6bb875de90aca529c89bc0af2bdc15b720a14e10f6ce93f839a17dc560a814c8039e1a452e749f26b2c73f719d3a0b05d4f2c9d1f9b72c8596d4e92ff471b8a02b5f5fea051acf656298e53fdbd46976f5affcbd9ae2ac4ee1d743f4f5b430857138310835dffa1964a5b1886ac3ab60cbf906fac0ac6c954c95eb29a682c23e74d353aba32a2df6634c1e1081d7c428fa2413d77a7b045e3026fa8eb9dddd45dcf7010a087cef09b4791cbe959a2241f1139470db3c25ae0bb278193b5381b22ba8aa695d3d6ddd2c4d8a2a3ccc07c7bf16ea3cf3c725243e8b5e802c53ab8493e7add18c4a9f4ae29140005ac55a027d188bd88635aac16c598cf472e31eb1040ac2c66678bf6f5d0d6c1da3311b9bd53ba98e2c9b8a3f37e5f5038769777e32081a5f6c95b36d09cb00b65ec85707425b88481d95929e61bbcc4b576cc5041ca3bf7e98ddb997b8c6a9278fb4ee015c40bbdb5d13640d474242ccea3d6b61e774053c3f4b176ac8968313bb6ca8dea605b61ceb816594255affacf238967da581510b00920822d2713de9fc55ad38dbb28f5ef5945e8c4b626f8ec78dc7565a7ca1cbb323043eb709e25d505757b94614211cd669b0cac7cdd67d38e6ee335fca84bdde5cfdf15b38d1c4cdd495d994bd453b747d926bcbf969bb7af89998a50bd443ce855462695e81319f67acfa0d4dcfa2f6f06e34032257701014910e6e6fa242eca7d0240b1783a977294e35e7fd9e95728fd1279d03fc4bfedc61f3fa549e654f5f4bd1c40fd115ab99879e4a446354f7bb6ca78c0e78594965bcf126ae4be204e4546ad1e7cb1e0de4966aa96c1a4e9e0c369a3732dab23c00c5d4a49ee5ac4462dafe43f4c66b17210542421f73602bc8eca3e86d79533a37a4be37c22962e3296c6167dece6d2b1e131d3014452c84a3c47d73c5c324be4132dfea11d9bdffb9ffe4a4834645b14c7d95f3c69a891b3c005cae5a94441b4e5e7144aaef35e508cae399450947e44a7a93eeac493e7dc1db513e0bed6f7afc9a3f8c696fb7c81ce5517d71ea04d646339529370b8158f48a08ceca17057b246a1e87aed3a9ba8482e565cdd11f07f48726c2555e06d5f4412b24c1306f348ed5840cc503040e3bb862d35763be4215271a21726a99ad37d18d22be3f01acd38458112f330d7172ce9b9fa4f1741dd10144a5b8d75327d0f11f03fa349063d27d2668252dd1eae1500ae4619fb375a1640f3e2126a90ecf3d08b2efdaf206d28f44acdf9154da78f75d700524b58ba2121e737aea874a3527160e0b6fe89e4b8f2a19ba6a56da40afa1da0943aa1be77b2565892d6930e3fff1259bc07e8131c4a7ced4c0b5dd7e356ed7799a91ce48e003122c80fb1ecac95081cbfe17c92e341a6934470ff17f769a2335ba5e22c068b4819d476f48d655a8eee65be10eeb332d8602b7aacc82d69f6c03a0382868f94a47c8923c4c08025442b91883e039cde8cfa6fdd741d721e1d6bc25566f19b98fea0b5d8ad82a8b6fc23f328bd8fb52126cb3fc15ebc9b5511faa63cf686bc7de5eff8b71eb877582aefa3f88db79ed8406cea509e2887e6ebf211b06c82425cdaea1c28b12aaa896ccea54713d3627be769f6033198560f7d670e8002ca6aacb5463f8bb3bbaa08a181b6270ca6352019ead6fa466d969c4ad880bea591f4fb4b1c4bd4b1d7ce85413fee5105cdabb18b1558a47fe1f5cdf329b48052f0856d028ab556d7e04820376a474a3480cf30708796b6eee8c9773ab7d1cc6667a9b3b667ffbb0b566dab0560e439a604f2f47843445bf122dd779b77872c73c4310bfa94e9ab7225eafaaa437afb68228e50649d19849ad467aba10fe1a8256c60b69d2a0845f7859637fa85765e4382e45a2547ed6ddcbae83fbb5506766508d47c010158eef73248d8b49f19daa3680be9ec37dd104d77d983ed6a96eaf0a409ba525ba28af80ecd669256296d28c4846c752ec105351e24a0457975f0a201218c9a37aa104e58249bab76db0f00a2a32dd27732136da48ad0e76e4bb41efb366fb58fc33182dfeff87f7be90c2c21cb3d5cc5637c4b84e1678ad1a9ffec0e9e0125969057ae5429b96c75140ee1653ce6558477e513e37c85d74a7c22d69f8bdb73ba1ec12f2de7e272e3c44639a61c48f865132dbe1c83da2ab991c0d83a4ac026f590f82c6e3c480a338874aeb5289735270ab8709ecf613af46f75436375911d735ff50ff35402e2a61b8b69f0b540837ea60fb20a8cdfae48a08e295157941219457e1990d8d7007cd0e247a4269dde96448cd2d99ef505ec91fb895429ee52c1775800f884fe1c1ce8b3a06967df6a90edd9a7123b3a26873354941d133a400a2c0c3ae0ac127e204a60b868a428c591b7ec2a2b08d440ec6b076320196db9de4a2d6fa71ac24641d03027ee633bb51f508c1127184e4f2afde15324ae7ef32efce035849cb66e433dd96145cc36b64c1cf18322e26517ba0ec0d3f056e8ec5410df18ec69311fa4eca3f554f80092d933f858e493420dd0945bc4306302fe736d4564b4f73f70761bcf843a7c947693f35f4f9bdf865708f5064ebe85f617e7bb9d11a1474e0724b31764f9d605e5296f8127150d84cc5bbeb129c8a2e061d70730894c5e7c546e58c7c5f49559f297e3d2210f5c9ec8f72c7ad4f7538400f92b923c3998460ac0c994877ea71207f656d33fc161d652f0132e35dd02e460700246cb85d79c703eac9b6174c00c2a20614e0eabdc00bf349fdbec2334c9257492747135b467afaf625d4ad94c81d63cb6d79ab3896b35aba6f470de60d7f3584181a35f447c71a583cc19ea5292a54f8421f2c0fb152e187d8db0321f48b14136f8ff7dc8986ac0c07442c089ecea8c2b5f339d9bb8233da91896f9af7bc67536114771d0cf825b13e9be322b6bcbdc3ebf8e0dd07d76804a0df069624045c3c721f2197eab5d7377dcc1d453e4786cb527fe10574d5c147fad18725f113e6eae01f65c548c640ee32e4a57859203276e344b580f6ea3bc9ba9fe1fed26045334f641a918e72e94d8495957a28ebfe63ac305426cb8ef7f0e717b2f4f59c3970fb1b0b17a63b8fd56d85e94b09126e711891dec7df134a9b39dce0f5fae89b698a906a2f8af4911a745d0a719a4e7c0bff2868a7087a8fbfde153adbd75a50c2d3e4de6c1b75b15048d7eb5785f0fc567771a9eb74ac798c5f39256d0b20a42fc8d700ca85f1132c4fee872c83f8a77fdab0d894e0ee213663f1f4005a1cb2a1c809865ad1aaed33a8aa61e1b073d81f2da36e4e18939800422427cd334c999b453a0cf6ee9b7e3b59e2190bc1c6287f629bb1bba810797912a5e97b7613a601b1f5d2ff9996d4bf451dfb827565f87326efd0d5044d393a67c0725c090ae402ca79d0d3062e93f2b08b73d2c237fedcff477a83f314f08c6c3d62cc9cd182b3f8dd65eb7e7290c112e0f1deb03fe060bacbef3f1b096ec663130df87631f20fd88f2d73e573a3f1712e188402ec99de070249e8b7945d0f0dcd75347ba1d2419c7c747f28939fe7704a5eab712461c8b19734d12eeeb4a4d238d146837627012e468abc9ab356d4bf9ce0e9b2c4e4f53168b96d79216e62d512a4e459fcd05d0edc87064a891a00a73e2f2ee0b55715a22c4deb5bd6557c8d225c723de737fc6f7901c10d88a186d9a6485dc760e853810714e412e5ab6dfb45bfd1d84052972d16351b7f7020778014662433954184d5623e298f1d448063cc896ac2514dc0385dddfbd5f2991a368f94455b2b925e46bfc90bdc272066e71180f314bcd9801e1599d0029a3f76a860c08558e3cf2ad83fbf7f47ddb6e68bd24a96ec62ef87001f36c94333c20cd5706967ab6d7c8ba655b49a1b6625143dfe4cb52dd9f6f79421a0b4903a550210e4ad84e2b0fcb1e070a2ac4ee600aeb76ce5ef7b518b8a73a440438cba05b76ceadfe743b732a300e2f237dcf19ec8f93c52d2ae8cd8f015da021d04339199dd8144257efefab3d5f6e0cfc9f3da06cd88b15f9b9a7a5a82aa3536929743aefa7a65a273ae2ab0e6e77da6465f72e05d517be3234e8002ecac285ed7a9c18185594577bc3d914f18254ca9049e647e84c209999efafc360354268019ba12dd07c4e08e90d92211044ccb450a90bcf21f6f3b9c8ec4377490038351165154141b22cf8c6a5807c610b2ba03314119b7eb1db8f4279bd8b5b6a2adc224bb249da968a9d21b5fb354b0296e7ce85e6c828e82e0e40cc66c146720e5615983c476c3685779931624997f53a7ae70665ab32532a7dbe28500eafe0439ea79ee27c8548a8ed25f198b9d30c6be96a6c9bbe54877652bad165045cf9be8c3a330e991a76151617bcaa703e6394a697a047983e3635d23789d6fb35a27dff85f3637f7789612799bd2df6a9dfc0b6ddf9ce9f6992e14a919c3963e0713b2d01c49f8d548852b6c99ce603a1e45d9f7708b83b946b719744d5139a2fcf11125b98d365dfad158410df8c777736ecac4f878cbbe8f13a791a3d7ac7b864c9f3c4e2d2fb777bf70d4b0bd894b4277e1b9198da5f4518959c65b0dabc0552a5392c99f5947c9bc49f76403b32c9d86a7bade59bf1e75dbafca6b7e49d4817d4a88fd95b9025d183d45ebd1e164bd5c111b4a26500738b105ca43c79f535d7881c24d773a0b12a50150061e9f35fec0f7bca599007a6217d9c8d849d1ff2d60989ab45aec0d8e5e641242b750647984680d59254b19f87461ef3815c1120327a1cb379d8e7842952b87450337840f0165f6d10a3e866f30ad03b3dcd31754cdaae7cd26f455c6b09538c66bdbac5be0bd6603ebea321146993d9922ffe981db57bf038cdeff95b61f069640f8f5e764cc2d089acde7774dc340e88a3909b0d94e0c02a66cd85d5fad5107334c6512d23a9d72530047b4fc800dd57275209927ae52eeaf303dce2dce64640f969ff747386160ec69d2e0f6bfcba34b804f2ffa8d3995eab265384d6fe33b0121e8a1adc829af6e772e14a5b5693ca985560b586692bb89ddd6e11018d47614e7eba3d466b6afda3710cbbf3fa3378fa1f05d179b53fc29ca1f87ee35d599c1fb6e5dfb47ece7d0112f45af43c5dff9ee809bbe36cb72784a2935a4df7da86a27ad9bc5d2c1b744efc2a3fa55c2e032dfeae6b4dd1bed2497668858b3388814d09169675268f2fd3f8c1ba7d85ee1eecf59cb6a852f8f21dcc26e6aeae3f34eb89735bd40ccd0dcc09358ba46187fa30e9b6d1333fc2480d3ca69232104a9a23c8c8379e9346d786d47a918bd17b2027b52c4c86585321f8f19113e8df77b4ba667e8e886d474ba7072a57b0ddac7075cde999e4058aec8705725dc7adab7885cd73390b8dadcd815b6003e04992cc23b92f4fc7f45ebc98327c8eb1597faefdd616b9ff42f039a61428afc2b73e351a8f03edb46d71288b105df3ed88e7ee61774b7b408954b14a344f3099ad45aa0cc756235a32099bff86661a8e6d2a3f579c979c5591762e6c8b496cf9a60156653b23e43765495b32aa839c85fd8d2a26e1b8b435daa9154150a659e459e08cde463f87887020d1c01bf1549e1f06458f332ecd3a75a125f63648b620c7d3279818b4cea7bf7afbb3dbb5976c2ab82f719d39fcb4d65aabfb6c60b44930be6c2fd7b4fc4b", tag: "cb32c9a1a4a549be088ec2d0fea92d11" },
    GcmKat { key: "5adf42a33e5d22d7494133db0715aec6", iv: "8eb1922f68c542cb6d219437", aad: "c5026a", pt: "8f600d", ct: "c2278a", tag: "a7baa793e7b1a8648538c0972f082e3a" },
    GcmKat { key: "3b0370d765efc12150c6d0e31a9ebe56", iv: "06838c4ba52cae6ed1f1f1e4", aad: "9433ea67300936772c2c3e0160ecd6899997bf1310d6b6d7ea1ef75b5534245935dde711b9bb44755fe6afcdd8a21cec", pt: "192a4b61cbe5322f1cee36adaaddbfe654b1b463508c302cd048196f9883da59f0fcadbce3c4aea00aacef7099f9cc0a", ct: "783762b9621c5716ed0d0849155818a9871aca7655373aad065d7a2e99afff0d1239480e0cd0caf2fe34bac842d7b430", tag: "58c925e36b48c7265216345fc6994bab" },
    GcmKat { key: "bec4698c7588918c25242d13f6a59060", iv: "4e913a61a3bcc0f7818457a5", aad: "", pt: "ff04e79610fe57914ea765f83745db71da18bb47ba1c2b8e5270717852b8371239deb2210216c3b80987756ab42d13ddaa1d6888b10cf8e1df10e03cce2f31320ba71db4e5ba18f22d4eebfdf8b5300c0e6335655c238b2ea254a8567f4d5e1d", ct: "33ead0179cd01a62d505f2118c8fe061f77d212df39390cd59a88f8e558d19092fd02aa8cf0a398081408b7516bb91c9c7bb4548506ea94bf43bc751114930b94a22061f557ff6146f6f70f0bb4c3ad74144f431cf425d24144fbb54a87cdd64", tag: "e277ed9bdbc92404d3779d8bdae3e06c" },
    GcmKat { key: "cf34347f4d3db224f6d2df8a3f8fbc97", iv: "7e789eaad8729f455ca75f23", aad: "4abc7f9a4904d043b2aec8f648a44cbd", pt: "546cd0f6bd798f64189e2d8c81dae5ea1f4116074d8b1ffb6fc3b636da226a80413c70480f04550182e4bee8d9622a8a5c9c718fd1b23e36a856956af38913ba21b83d712e4b7c0e62daf29594bdb5b2fafc89ca4b43543d7a89386694db308edd0ec7f97462b5dbbef8ffd27437faf92f569c2c37aa454a79de2fc1105a4caf514d76d5f5b0cb9e7070eb5b80f60844c3e6ad62ab920f57b4a6488ee99c454039b06483eb093bdee6577e06826c2efbc3b4a3faec14a91cef7238c2405a460314d08bd830634001a44b7dad99442b44e003680cc51e3b8037eb17154c0d31ee4aff24212fa098ce3f1b8a56be9e079c5dad294b015466cbd0fd22b7e07f166ac0213c5f152482d71ed2cfe173724f65e99394d4537823e207efeec48ffad02499d82e350c3636658ec867edb919fc100bac6c08a0d1f6c0db39a48deb130173c7384f38f815d5f859070b789d9920f8d74cd28c9565bf12adab2372e5441203b31397c510dddee7a06bbf17473f7674d63c8947dfed144a95aef83eefbb1319360cdd94da5c85005886b99c25356bb7e5b2e9b39fe38756132f22ed2f8dd8082e964aee99319dbe2d53a0a6d89008e21978810545bc017a228de2ce7cd03c4ad3b8c01dcc07ce90ae1025a42f29cd5d8a1038c2ba2b70464a17a690275f723883a3ac66b34736ccbc9d7727c1dfd9c6c7269843cf8270046f6248eb3121d912c1b659538fd27ccc41ad8cb3dc60a483dbaf905f965433e3613b313b56ba1df31f764448209e96dd2f50b6f11208e39eeca2bf0005931c6978ae788aba0d9673c05789f1c599ccedb3498e3fc62123a8e3b7a5df5952e104c498398f1bea52f430a82ccde19c92c4190728f83eff53e0befe7f0955e78d2ca0af6c2e2c55ef98a5d30ee24102386dfb144765abd723c7840d4cd69f859ee22b3f8ffc895e7728b443355768d162c93b33496aa8c91818f0b2bf5215cb42ed9986e9c048ef1c5bd1771b832707fbe6c28a2a78d7b8260d398a25453d6f0a35e203abbc5f69c4683ad02fb4cde9903142239d0114546d7bfd07b0123d07b921a92f326009a8d83a15df047503a3fdcb3b9a05b243ee4d5ae56843ffd50d94baf0620908417d8e2ae3dc8d31fd84ddb2b056149f2810ba2d87fbd099e5da8f264ac0209c28d17ba3749e974655f8d7b38264b822550fd8b92caf10ee88a38bd4ee0e393289ec35c5e9784ed250919ae044261e95f3b18dfdde5e903ab4916a751719d58f3a3ef10ae06bab97b39e0959d53976576f175754bd31483dc5d0632c404f606e585bcebd4b7506f6a36f78e20eef5c3b8b89b38f980fd1f24eca926b579ba596c1f79e3ba8ac3ff0292c4c6870175bbf2f5ed8ab77d889ec8b86a1815dff4dae369aa25966d2df7040a21a72aa27892d00f1e64a1de2e0fb3f638862b076456da19a6050710535c51cbb406b9f12cc78749a78c6778c79d205f6dccc718abe78843a510f1f022bf6fd38e743d186225f9e2840567a936d888cc500b67c0aa82934eae0defa4d77f2f1309f363552b9874f9be4e774e236e9e1a39d42abec653df61f337a45c4a68659782c8ae2856795469462865c4673973e46d35a0d560fae5570346bf7eeb7b7f064bfc81803e1f5c5e5ef4e6a497afaeaef1af5430c35d47c5632d9cce4b218f364fb6403d839930aae2c9b2ba26a0fc027d3d40e10d07a64b1b8e423318aac27afa24e45f5091c66edf7ecd9cd089e4292dc09db482ff7e8d40f8630a2affefa7cb39ddf103b4bcd68d12e47b51281619a2f75d7dde24af45dee2bddd1d752112568a7a7bd5c8bea75669ed6d29aa9d2339b7b6b7a4fcac61178e78adda98e127f4145eae4137cb07f27d59019cd4ae8d055755dd7243b9bed6b64562930356984ec3b65f5876a9fe14bea0d538757c1cb3196622ac6b8aae109a99c926b6a0329bedc060e1b111240a5bf1129ed06eeb231b45b4817556865292c5445f2e6d30207af669ddf183b364cae04c7a4d61527bc13cc6da813498f3760160c47ffd38347f5cb74d611708a01cc1c0d2660178f6cd919b9d6f7d996b705a0410ac9d4e98c1a5bc2560896d47e393204daf86464e7760f71b28c3c60f8d24ec98db63dd6b234e71239a1d5efc9231bb91def453dc68420e44225dedd00c80974624aab51c4df451a51b3c081d969437405a2d38d018294fff9edf57b4b1aade2932c5bc64ac61e0fe5f2669109c314585a9c3e2f5dd174eea429f2839e2f7be06bb8e617321af005d289c0469a992cb4fb708c1b218802aab20ef45c008ac566e67eabc5d38c17d39177cac7acfe95455d601a7f3734579d1a64e70b9e0e25f8024dd5e88c361d8aef0f70973c26a7c4caa54368af8263a27cc8bc435ba649d27d18ddbfca4cd5c6b2c49375caa03e3148b2f2cb41a268a4b23b5452f09f2e03fbe2fed2400b49ebfce70d5581c1992f9d48997d73d480975af9a483c574ede22199a3a4352a5a94715941d0ea9216a4bacd467f890d80d8e222dd6321f3d83a81a3749c582e14a378be38ec86cd7e3b6dd55bed814fd7ae27b73d4ee80c798a1622956baf35e8cb2b8baf2111aa80ad13182a193b16df166c706829ae83c6b8be0d365e0f7c94ca25b6550a0c0431a2a8cd4b61565671d6e3aaee864bf83a250304446b4690f2abab0b28454cb54a8f78d74630bb7d1e1869872e8ab2498468ab338739fbaef956b4c3bbb5d3d693ecb63eed6b359e03bd797e913f8b22169b8c1aa2083f7b6e4d3e211c8c847100aa6fbbce693835ad9112290401135f92fb5188cc4547dec8c06abca17436b555eddaed336feead3a23a5d107b4c1ac4480671b86f943ddd5ab6a1f81e3e74ff83786cff360597997650fc497b57140c6df5f478a273b0e6ef0140770a1f45767bbc7f6fc05750f0292193e8f4f5eb38a577bca677ef9415e03261f3650523727ad4a88827bbb20a43b439ca78e11b48d13504882441b8b2be4dfc98da4bdc5739b38a9813090272d35772d500da66544294894d4c8672577535c0274b536f13b6c93d8d34ef964a5463f40b99d1b41e62f6814bf9890ae8698f96d2f0ebb583f635ef2eabb75a4c9cd6754645c06f970e246e12d0cae31bd9c1d7d825e8a997ff7396962dc208627379551d7e466efe91460421b540b44480450ca01f355ff28ea34b4d05e1c586ed757a15ec36c970481dbf90f2a94d7b7b9d8e99eac301e5c41e35c8714b572a18aa9f7bb74eeaacfb29b211245bb0e8028760d6b4024dace669ec2e633bdb5c416b6741d4796e27d1ae85a2ac4379b639d8abbd8ecd15d21957e3b4816469a8020c8dbff14d64eb1beda9ba91e96385c81041b13b0ab766f0bada97af2d8460eafea5e934ed9a0727f8d43a405d352699416ec1107996704b535d89161c39cbfcd1b88472ac99321efeaffe90c47a612a74afc7f79b0af7bfd2f13e5e92f674a5a2328267fecab0b5c63d1308045b460015e39266c333c960d87310e31614e03ea07b90fb0813af1053622f93da14e0ece88d55dd8c66aac0782c5f7cd088bb2e54ada1a2bfa18ea4dd693824d041795bc5bd414dbcbd1d817bfcd474e894a5ab3b2b35b94e5e907c8e21bfc08813903632654dbb2916cd7d7e3bade2609cf56f667eb1962909375e05bab8803b25139d21284521bcee6ff60d029ca2d00ff59e6e872ce7d7a6eb133591431ceea54cd2c036a5dffa6b43cd9fd20e66eac41f28c091d80e57110dfaebb9dc522cda84c87d16ba83cdf10f74594be0f9b8ed547b717324e0c87bed606e3ed7cfa50b84c561db2054e987b2bd94a57560927f6af4f2b851fe229f8fd49f04391494184ecfc31b1ad353885078eae8b26807cdac5bb11c75347878d8e0a341e2a8d192b26f29f62b182169a4582f52f47fbe3224e8337166d71a49257ae63ef7f17dcf2d3d7dc2a3708d9a9257057562fe66d1532c359ad7b157c5cd0caced80b51dda471dbc715b454da790ae1580ab26c513500e3af50c48ddd9418864a52061a4a13ade74a6d609744a8e4a721511b36aaa3c471e0effd6a93c4a506f94fc962f48122d166fb0adba9422673934dce50000b09fd8bafa532b387b5dbfbc3d0f06606f419f492d15b0327a40b2f618f0c544c0ad54b86de3d6596d0614eee572f4659a0910443ebb173d9b54b1748181bcc1d2f65d2fab3da51f1a918a12121b3699bbf1a461db2e78dc0bc28688ba1f55182079e44c8b93ac0a10bdc205a351dbee56eea66b3b784a6cfc463fb321bda12e7e3bb0d0843fe128b2bec4194bcff29c54acd61a86750e6e6c8a356209452c992c7e280f17ed3430c94f0d385813da1ba4e760180603a001daed6ca28d394fe3919c6f68a7014e0036adf0fdbf31ec4a1668bc6b9474aeb3078793d1034831e6a0a0e18e3cfa61f75dcf3a0446f11a9c7189fee71a5851591d03b3441411bcd6fa5f66a417c3e0334c9071bc1bd17e19a35bbf5cdd63446545f22d90ba7d08821336765567143be70db80d76e30279e9c87e29f4aecf90c041bd6cfc065c961a9f93bb4efdad38f827ea00a8eb1f61bf45a6c6562db8d25b0bafeb81bc5621a7f40dc56e6b29e65faf9ccc6a314f2996d698dd57597a022b492e563e9a1450d793741abe3f75bfa59da461844a9fd0ad5b2be622e5cd8a2ebddfd424774cc342fe93c706db6bdf1bff86cc5c31fc04b9813731f904d893161fdd1a4c0270befb9883f1c48cfb3cb232b5e9f8e18449973ad583be6267afdaac3642d5a591aa781e777a41e314ddbdc072505f9c97d9483efac571a4119191937d38d2f76612af80de045b7db2a6d8a02b13ee42dce350edbf4c9599d374d7d5b34b09f01ff706d46f15304b0c2ac330c41a33f84dd979cdd11ff808abed7061b80f537e7b30260a55f817d2bf324fa18a69aaa8c8231b2c7f9653e1079eddd4c781f9c334e3edd6ac6d7dd9a29f54e558968d3d2f234e0115ebc71313e095a954875aaecafe8ab968c0ee990adbcf8d124f1df701d4f04a95131a31ba80d2278c56eb3409aeca399cdf4db7307d8856b5e4ae51d5549579c3c2a3019bbc7a98cd28b4f892081ee2d0eb2ceaa8f333751543631cbe06eb598a41143159c497885b36f3ba9b3969df91291b54722b41133b06754c2f633175f0bbd68d1a3a5893a77ce7208617b2d3b3e32e319ccfe298c004a057f1ca24fe8b537c21f295186aeae61a523746f61778ccf9cc709f6039f022942c064a09030dbe37c646520a3e7231562d265ef47dbaaa29e9e3e837dcb383335d389e9b3f2a5afbcf771703a0356320b028a13144156c586446e5757973b4d24cd3bfb81c92e8a4e8f4a068a238e57910662ebfd364b62aaafdc26c943457998cdd085b0560f55232a2efb3ccf1c74a05dc69017f81fb12cda8ecf7b2854f6fb2c1bc67a46631bd4d8ce49a7e5932a8908ae8ec6da8449ee0c3b483bb5684d04e699870359d8021892fdb95b07da8caa69336342e1150c0175991a45bb10165d1adee3efa2a7c3bb536ca4ebcc41367224e36b0ccb6d51a08ad85d5d8c69d15d08af03a4c7791956801adcb92d43a28a2c48f87eb49c8a5c60bb33d5f23957c2a07a5465b7ae9a42d80f3526f500239a7b5703a4f7e4b15434eec9932ee2209ebdb24f961746bec5b150c01fb0796ee8c128a74af3d9ebb1a60ebd10b28f53d60d574e13bc44251e584cc867456562b3cba27bd94a99aa968b77eb9c60c43c62ab07e8d23b9e2aa220c3d562147304a0f97cfc944379342e8d24c2163ffd22748a0c737c2c6d6044bdef29079651ee1e07829a29444d9f0d27496f99e643feffb275f75af2fd8255f2fb8a28600b8d0c5b9aa1a23ba7a2bc0aebb4c2d951756673d450af7533f1ff22c075ebec20694fee096b94816a3067ed87aeb6188dbd7e6c1f3f2ddcaa0f2729d36d23309b122300d956d4833060e4e14ee11905c5dd84a94de32da53983fc3bb46724780db17babfac2bc289019facc73f803ab0b1a3b747f8ecea41904c5d5a098ef557b61316ad2c943b0073d370bef3205d25ebf6bc6f4ec2c29b0927cd4b8bcea12e7cccd3462d79e66007830931ac25c529e0a753a29e0b96a96c623976915519e3dff1658103c9742ba2e3781b331a1fda68e7395deee07397f6cccf861f7efe4bc4d42d02b3b9d955efcd21d4c9a96c48695020942adfcb035444eb5f7388ea22ff2700d001764b624f259e3e365ea7c488d8118d22ac0a7062b4e93fdbc5c47f5844ff82e17c2462aad202b70e304bd30d5b1da41b104ae5632f6851939de5eacd2a633edd69b02aa1cf6bcb949cd784aa1baf260954f195c2ff34d11870c2c4e8fe95faf23eeac0facb457ed80ab1919fe29341ccbfb94597aa082f7d3c0d7e421753848b4bb122d349de14acd935c8a0cba6ac0ff33a3aee90949f347a179a14d9b2407e7d199e3b0df4e6a74ab935bde5afda2eeed9b22102f2e4c80c414eb2e9d01408fbe1476f46119b7a43a38b9189b12fa92c00fb8891a7da2253c592f0eadf0a678e2c825cb0517448bf6aadeedfee253d513163863900596910ecce44579e517954275af7b7c8bbd24339de315d7192a8860b9275486fb23065af523fb21d44eea563053935052bbf866e730736a87e575c474282aa718033c98b4b835bb8634f9d34ae4a2b9912fdd4390971e0e37d617e1c19edecc159d9435e19b0e706552b77e97901610ddae5ef19e524f06d3115be27a65b185cf979dcc6bf3dba07267aa792ef28d66ed3a979ac3fff5c9387f51abf7714bb5cde3f60fc3b01b3d4ce5b7cbd69debb85b4cd909ea464cbdd4ae50c3aa70ec32309d676dd74b5716954e5dc8cf4a6ce942a50c80533528fcdf62a35ef9c5a25e249d4e4e6470c52b15d04894776a6cc7c2493664ce8037d0951a665c008a551b4a8da57ee10206fe979634a4287bd9c712f9eedefcbeb82bdd48eab64c2e1676860b15fdd135de2a8a02a73dac8cd82151f7aec26910fa3401f5543e545a98bb1b39ab69434a1cbbcd7ecffcf418dc9cd4f076532cb8e12ac5de189a93d0df50a7f19194e313c9076ef96272d2df4e06af6fd5e4058df602b0f686d709a2b205b267c14fd5b70f1b5fd94ad9f86dec3ef2f41d07667e30986613216506c5ed51af797362641e6d836f4d6f66a489457fc2c161f41f34898dc65084b616332c1c02a6e605c4867a461a4dc5fdd94603ffa073b51d25906d1db159f1abcd5c5603b1b7a7fad321325aeaf6123236250270cb65a189ea018be6d68f4f38b283e4c98d89609e13ec110907f6307c2acebd000f77a05bf6bd38d56f46e70585263807856f11f7224a6c934affe731ed185ba0b18071c4db1d7e760bc4227bdeadefabca1c7fe62f052e9ecea64d28741599f122e2a2522369e24ce23753dc4b62d634d0e8ec41fd8c3b0f5afc5587f10be8915876c7407e3ebab6b0956d9dd5ea3a7336ca3af124c0189e247cd69966c50ff185f2d70bd31afc7ef9d4b79126c34e06e0ef11b19749d203fb9ef5badc92a1820f24834c42506ace6592328147f016f7e7b034011a0d9fc09d34f40bd8ac253b57d540ec6164d7f249ca4c704d7a4a80bdce8c9a8cdc4f6e10aca889493aa574f293cd422f1f0ba537a54a3916ebb0e5a79660d83573b6d525a558032a686237d06f1c8b81ef162a21b4277fcd505160e1f7cfaeb86d2a163edd226f3056a7804b94c8989cf1032a5f9d0bdeb33a56cf085f7fb3bc2999f7017368bca2dfead15e19addea98b3a66e870b678c685826f879c07510cc05598684212c8f669577381a033c171fd8090e4d2ab7b534fc44fc3f7ec848a044b348a5cbb17d552ff9275ce952f6d9dfcb745b4808f9435d06a3bfce0bfd9ccca4424a2ef5771c8c6a685ee293f89e414dfe105df132e2c9c4bdd28c3e1808d3fbf21185bfc9f5fe781ddb5ef14244d3347718b49bb9eac27a280d924ae686b569708f827d264cc9d19597efda11cfd5778bb6afe684fb25f423b71a81601c1420e9e7a25113204f5b11398a4b2552c14bfd7144f681c166fe998c1f11d1d3a4c6ded5cd48f71bed8e652e78cc240f7e72edaa76dfb8cbdd0016e0330e9c68249f83b0f726ff22ae4487bd40a881155d1c619e26f3b9677259a23993a6a01a1232831c2bec41d2c6077c1e62efbffceba733cbd72e0d48b9110e2144be9fa892ce5f85d9504ce8cb8e774f20742d0884fdcff32295b564c1cfa3d1af6c5d69f13742dcece3c218dfe2c6b3d0b763cd3c78f4bd4dbe9a6257c76d167d580d2a7801dbe37bc4044146e543c3d453df8aee606a13e6bc34432f7f079265c41d1716533a9672b514bce4c34961d0f3f5f34bf78880bbcced7d90b599ea78d376fa3aa55e9f37e18205e5c9ff4198fac5b250f0657f7e1054969d740d16f376faead0770b6e8877e734ec009a9653ce4cfd3b3b5a0b88a1059542a51148683c8da345869da29a5b4f871000f036bdc33819b9bfac1ad2bcb549ab1c34856cb98fc66e5bcb9ab82415f48f9a307452d1352ca97ea230010e69337071a82bb6b3a940b1ba098a8818c8d58d4fd6b1dfd71d104371bb7a678e0969ec8f8adc589200a2e2da430b9fdf5dff430ae0a9e3528bec80d76bb674388a55941f00bd6b0539e7bad865e89a32156939bc84b2cc281dd2b2b08981e39574fc38e9a6ff0ced09f0b9230dc6b41be9f79119fab5f1dad0ce0b5575b89e81ded3961ccd63292a3c4ae0c372af60c02dee4be457724444dcf7c0fc56e63ac52af7238b70d63f6eb8015bc441b27ec81e8b79732fac6ea0a77c1c9025899b0d616a6c0fff4f88c0b525d1f7c4aabbd5f4688ee3be3d3e4085e50dfae0716b6002d1f00930185f537506d4f66ffc912edb9f21919b8cbc224551633b5a0c9eaa4faa456387f8d98cd0d988730dfc8ba52f4f8c6988c3190882afa1572a1f34d111865e621106ba2fc6386847cc44663eaa684c9f5fae7965ecce365501bdb3b29f8e66358b803a7d74346a44ff78d6221e136a1df8828d33d7376ceb1603945ade36535ddb2b034480a603915409c6a83b810398694b8c61cf5695d614bd1956efe5e9580efc22c59129a71f090135fb0e44c15a7ff12a18d1b62d04be61534d7506e0a0c1e21bc2d41ca207079b06b6dcf944c47190502b66281c623d9c4372815d082f95742b9f44412ca1170a0b986d03ce5f8ea8283f7c6c367a55e04e06f8f114fa1e00265b0c963c28ecad62b73097aee2b6147829735c126e2c0762f122149f3cd94a0fdcbd744ee22632a40868f57f72ec959753b3a4e074ce25e0e15771579ad1e79df700291f4389e14619c4cff27cb4b7fecc2a9b2e3832955554ae37bda8afa62e62732b7cd2d96d53b36a80f6459e9897ea2c75760be74d191785af74cdfb4a9169d799d259f38042d9129abb6353c01a1223edd47bf8d43ba4aa21f9f8464bfb377d871d81761986209df0a23c414cf16369a9ce213529e48155d3bf138801a1b789c1ccc814448ab21b9e0ea00e4cb5d5dfad9e44962ec489e2804c35c6f08b2846951fe1eaf9de94bebe917aff034adf4ade33325724ba88102f5e1b82cfee8b1cbb04883fb72b34bced5aa54f76c684e8ae01e4834f38510ef84b8d7e7de66f0f176ee27deb12f58e0023dc81da5802d8ba0ef33cc2610b3a7f30d6f7bd0dcf6f18238636898e0fb1df45b4558406b214fce711407ee8c95c54a650df6c4159906e571be5278c35503758972b6fb9fe978bc9518a190e2140ff2057c97ef5b17bbfaab18f6fee286fe36ca7a746e14910bd7e16ad37babf522ba04107472f1b9a78a79c59174c2486e0643a908c843eeef41060f59e3a8c471d81920654e29274a53ee02a314429da8606867f0666d17222a3aeb8c9c71494126c73561367fe1508d680f47969542c2d82808bae40ef3423ba3a687f5ed736b32799058323f929b73de383a75135c3d19a6c5b2c02d177edf74658f61cfb28378a76b388f64373dc71dc0836f85209d43b099dab214a5a726516ca7187ed401d59e04e998d9c9c4b00aadddcd260c62ba5113d650cd33cf163f0834ae6da398f2228ffd3f730966948222fa882e5ccb822dbf5a78cf47b3e29d5f8ec78f72bcc46de3ba74deb1cf2db172660fd9b38140ddc2fba1a258f35460444edb571f706072e16a925cb7ae0b0d1fd0082194eaf34663bd2a5854c4a73798b7348cf864e8218c79cebe836bf307d5dbde0950adbcf7743eb385a48fa6c4e8284655aded71bccb136f4adbaec9c8e1af3f7a1301270c420bb0102768e41670116ca95a37ae61df23ae4f4a065d559c8cc1808602fa554cd66aefe3e447931ff90d2dc2967e1bc801325d5176b2205c04c56776c8a745805a4bcd48c49d989561548d356a25ec0636353739b512ff760db0dca300cfb782f47caeabb84e685fcf83b794fd96c5627ebc03a8bce08f69c34a94f9279fda4f17298665e0675ed2d07559f019fc7db9e94745e19d4a5761d89dbd4f890d0d9a8cca81d3f26d2f5ec950f3cde3af74b17ab43e4dfc6c1f6d1d15be9cae9a031d7e2adc2e706434b05ccb4bb36bb685488e2d84f141ae91d6c1848222f044b726ad44c070f730cdc37c638a464a7108cecc75b611a4326c34e0298dbcab8156c9d691ca93f347882a874dd2b5c67fa6957f236ece8dcb002b427f4b5a78de8ee7cd470adaf18789376c4be57697be1e8e5ee515105cff97135dbdf8739acc6777251db4c33be8995cf9cb0cdd39310da523d459bd9af4421ce2bfadbd76d78a1c49915999c78e7ad5b8563b9469705f8b7212aaa905a546229e3910ca1a9cbf7c3ba4116c3523887e7e0c6677e64f80a37f13b0cf2d9321d08d66f92969eb6a5c9f27a6cdacad84565d986960d45a66bb271ad6f52794817b6496b863021962b6690951cfbf1f8460af2dd1123e4f89820616d917a06c23bf7e259cf6491134316b98b7f15b45842581c6e45f2edcc5fdd95e2ac069b6cf8d309e3945bf2d2a3a8b8f28af4332180020aceb2e25887ab0a4aa478a95e794b1ad13a658643068822f2dd5f49232b5bff5327ce85b63d6ed02cd01f042f9c96d2cfb9aea7da5e6b19793087dcdb372f2cf4ad3aeed44ca621f4de5d618c846864dff945cfa325c5d222c03b654bc42d2e05cf607d6f45e39bcd1326ddeec1edece488531c3e8e20550a239dc4ea8edd9bbe9363d3f53be5cddd1f79a2d2b77444026a22f0c7e4d34a08fd9bc340d0eb8f01674ab271ecbfd104919feea7bf420e1033a0f5c2033b54cb3f9b0df2de8a08338b253d275dd543acd1dec167d4da5cf0da37f4e83684ead0db2fa323ba4dc12a9ad23856cee90aa69e716a28859fe769c312a659483e94255116ea1fa59b343b68a125ae3fb4c403c4cff7a4c58553a479d930c39dc7a61f84c74c164c62b9b092d44db3ca905ee4857bca53c0db02381dc9e6d08485a5c3ef6c2e47a6996b707407db35b781f24c6b7681bf3e2deed05b60d1f3ab21b5b0c713ad7b3f399fd9993b667214a6ee9ede18f08915cbbbbba009d36d844fc3b72146d", ct: "ed23d6a784e1f3bbf86cb53a0a99669db862b37fddf0816881345201a7e5bf8db27e23121e58dcc7c20a52ca577453cbb6b013db593b210faff2e1027044d894b6690c14cce875d28ac3d60ca4427a13d7e09d18789d05c530b648676d260378fcbd67fd7fbabcbda23435199bd180bea653979a9cdd56ae05d466f6d3dd036e3f0cf7092c52e787c7eb0274ca4f439e0556259f90dcc8636fe646153b4d9a9708e818548ad920f50aeb44fb86a30ec09cba7076806c7b8ba0c344e7b5c15aa41a3cb32f43c69fa2ccf81ac3f3e3e17b1b7226c666567bc514661347d7ef38ac97fd11f0e6a838ab304c3b93e595293ddcd4f64a72a6d49bfc5b0fd3f5e0e4d17fc328f82ea9457040060b151482bd7724fcf59f575a0574492290cf5852f5e1e01f45e80863b2c3effdabb334c36d5f273e8f845bd6a2fa186c3957d20bc5b11ac50bf25bc84b02c91672ef727ce6c9a3cc873345a40b0aab18595fb8bbb4cfc1af2a86e856f413248eb7c7361c1117eb56701482984909f88109ab46f5db1939130553ed7e5119aa0b7ea645a77864082923ea7b68a1a72cde3070a2743337e124f326f9313ffa418ff48d482a5672b30428ab0deb94f853ae7d4aa083d4921565459cc0339317c5b206831399fbf03323cab678423d9666fa4ba9df5f75deca76df297b21e059ec7e3b9ce3238068c043723d57b77d5f4267c6115c2f4e128058d80ba004a673e2d5094c84880da0cacd669c950fbe4c59f96dac85884d6e1759abbea3d15751631ceb2e2117b924fd467899c8b6b3625928dba72bd4165d51940bccf409f53a449b189e209c0e38308f5fd031e71d03657a54fa9c9d1fe25bdf9d90d6ea8a071acc267ef3e99fe5b6704e752050faf4380c95cdfe04167d988d85a3cae4e32a8e322f722cad995af7f9bb88fadcf4fbc97bab2fcbf6b8d9a25053f59891478625968c3515d1e23f181e9a6592981df7a2b6ee44b5cef17455f111399d4ffcf31061a3119fc1fe4a3117df1431fae17a2ab5d70c71e64ae99c13340abc47e67f587d04387b3694401abac36bc7cab311df7494504f5553773c269a366bc14aac1d5a5e2d858152c51d01f6ef57760fd500c898c7b76bb6cff0ed9ab5fdc369c1b7ecd92e51d207dd388665f69cc80562c4aaf685f6b769e80e7af3ce20a6b8639ffa07f963558664b56321aee563ed010541160f3015d0955477fd85ba903595092906795541c41bf4784a43bba26f4bb54990258383eaf91090915cea3d2d6816ab599e06dc5d6da9dd036127a2a52c9295f132e73ee90906ba5c0989f64c212b7fd7a6c61728cc6682aabf463744b34e873cf7106383429392d948b87b0b2e29f5b5007403eb8b0e265d41657c906cdc96377d067359970860ca014782455fe382f216f8d112ec5c30e44bb5b355404a10c0535a7fdc2d156442a13c9af188ace1e1a4348ffbd484dfb5f5ba09f454acdb9a150da366ee0303c29f2abedf15699fa9aa9c99c2b78c5bc90c2f7dda5c76bcc6326839b6f013d75ceeabacd28f70570b99d545c68b3c21979c86378a5a9c7ccbbf8b0185baac0675ebb6b6efa02eb31a6d344e7c307534ec02ca0c54e4d306d923a030394a701432d3793bde4e848fd0052ddff82d0809f56525756aaba7bc200968f5c279597bd98693949438ec28942d402a86c6eceab154bccb39539f6d087f938d8163f8a6fb9d8b08b30a0299bd05e259a07d73931b0d0779b9b3c05b398d3c825f11da53dfe535b196dc1775ca3dcbb7f6a85f1907126f37461a3badd53f7dbef469f45b1fcb12a5e1385cf68cb33eedf721460b80ef81af6db083e64f0a3a945d7a55eefe23591a13f3b28f4f65500ffcad3a396241fc03ed09fa1b44a4dd6e9cf5abb87bb4cb1c3f3cb0fb5e8c5dc938f8acbdd860e428751bc63e427c8233ab127fd981d5f971a8ac7e080e755a74b86ed047c78f7fa3ad91483122476adb8d6cb612cdc29a009a6bf9ed818374f9f8c30ab9b1a0d07f890c33c7319d4617aacfeaae0a1a2658fde718b3ee3c647afcbc36d3732717ee7fb4d6f09211d64ffc414bf1843e22d96b44347e9bf14517dc37a9e1cf36731370aabec86293f9603cbd7e4df43ea535174429b050443204ad145ae15a0ec74858a3386ce3abd223c2561a3ecfb95c811b4bae78ba0f30907ac2585750887f87c6bded74cf4f4ec3e9c4ade58792adac7ebb7396d6941c624dd69a60520c5afdfe422e90eb9ac86f3af64eb2a0d5c4e9ce4d9aeb1237c2f6cd745e1b185cddeb882327cc522079d8e0362452a84a8a631a00292fa5959ceebe76fa142e4d26c3e0d7185253f5fe8d17d2de200fe7a45734b42a31e2648e8d8b05d5ff164e8a08c6dc230535a4ed3933fd196f649570d73fad218e029e3f3d1345e59b2765f146344b743f731c180a8bdf39245ccf9f76373b4dd76310dbabe68c21f460d07be39f5217c6a2c861c991d25af558d0df6b4467cb4c0558a0e440bcd51b0da4ede470e554ce61325f8bf4948dfd604b8ddac49d902b84444c862ad18f34db3b3132332ceb0bc88fb02441f5cf14643164ac45bbe4182a24e7c4fd71b09e61e5207ed042d20e21968956d570750c7d5a7625d3fb657c3f2a4881767a8b0fed82c4449e47c39f70743ef902e24a294b9c1bfcb64063b8317791ab4eda9069f330726209863526beb571a5b624a0615bdc7e6bed34fb6f0914baa584abe05770b7e4056e548809ba01ddadf14e2e9334b507f07f8849d1615e672b739ecdde18e20a4a4a6ab53c3ecfa649423e25e5579ec2eb9a986d12a8ce6ea6a6c6478eea48c1d06ec511b80f2e1217a94c983fd5304c9b2912e0954728672eeb12602ec5d2269812d44f6cbb59ce77921490de57c1d031f91a86ae1c8ddbd3bcb79f19298c0c48e6b7104c1db9b23d157b0c4a20c6b7c49aaee90bfddaf1e425893c53c7b95634bc510d4519efdfdd1207d33387051cf691af6f4891a03181ff5eb3a34dd27e3b8228e2265c91238de9d7b9312dad03fcf2635697031114d206f5165daf0e509ae0dac0463188c27eca4af813e76818f229f02aa90bc0d8b8edd505cf5637cb9a8ca60007c5724bbf5305b627bb74cf58f8e756d8f8d298574962ee409a4c837ca448e2116e75fdf987662edb53e50bc07124c616a548e84ce5c3e7f709dc624ab80e013dca684c5c34adffd874c0b0dbe3717306cdd39b43b19e088da12176ee675a26805cae66d0853d9c6834c71e9ee9e9bbe51502bb11dddeba0d7c94c26d547691d9136477e0b655790923cc13636ac9532d5abed33a9c381482921d09d7927a3e88ad16d60532e527951fe6a10f57545b8566b63ca5e238bc9762f6c344881210d69fc944fee3136d88b768fe48f1a9d53a76d243814a168865292f737221c385db58b09738aaadf296b32e17ae0e05f6dd28f82853cf151638733dd07ba4ac858eef19578396675d9790ae871adef24e2b866f20bd82354550bfcd851a0b6b4e4b8c7e0ff996e72761484570fe4daa2862592f00a15d4e418fc94f5dd512353453b213dda1d46564d5fe90ec4b493335b31f6e6293131f5de105808692883c80860ab1dda375324c082e628bede965dcb6927732887655531ec9862833dc918efbb41383fb5faad2ed3c460f9e64e8b63c0fb53af5aa18f317aed45a4a905a81d11320fc6c1916fa551db9c79b7b5cc4400cc9135cfa7609352bde3b50730172258308f61047d056654d33dcb4fa0b60fbaca4ac4dc841f2dfb66dd8bef911fe353b6fb1f814f38adc0cfa9e1478b5f8e7609e1637e226c65697d0bf8b5ba9fd207782669c1b009bbf959b5f53442cdd5415352cad3401e57d34af9cf5e8e4d9042b1f65cfdbaf68b3525aaf52289903032abc57475267a1f717a563ec313b8b1614f9958af37665a4eccb87ac8fa8556d87fbd87f10df83ce79fb3ba443262f65c55db76297300bf7ef4110b22437325aaf00b8805871b0e061570cb8838e74c9c661b658a9a4f5a85bcc39ec78ebd40654a75489dbe043dd32003dbe35d789c817cb5a64e66da0219b27916e4c900198a66f7d4907d85e2bba9d7a407751b60670d59738596ce36d0bee7f58ca68f9aabecd9d50a3a5ba84d346c0f6c43a834788989f088ac43aacd152d65ca34631f5a74f0865c3f58ea599db3ceeb41eabeddbdc82219a618eec60b504a159f73ad137aa57d89d73ed0dff7b132d9e49b76f9b1d7508ccf1da8f2a09d13471d47499ac21c5436ee2be191b03892e05812ad4b4038e7d5e6e5ddb3bbf7ce82fcef541e1ce57b0904993629f804a5ec14809ddc7fc99cf74a3a8d4ece1271f9d53224e7bba5e597686947aedcf0b21920fd7bda483c6decb97feddcd8bc2d632d6afc3c7e722ad92a238040c6272287a39038fe0d4a1da8b515e3aa6d6f552a6a89bdb37362f51430512bfee4857dd32054f909741d6037c407817b7d98eeaf6a196a92e59c66ea95bbb75f8b6c734fb36ab54c9db0b0705102e7de3a4ad7701164eed4de2682d7cc6762bcd15d697035d92aaf8f2f83d2c23dcc31a678341a02cf86eb9424cb7772f982b632ec66b2445fe58447a4f3e14e599679292c48abcd4e563feb58c64bb94637fb0f2d138e1dbbb141e3ba997f40037ec56a52c5d1bf03e781f00fad474f783647457ebc244b9cae52c55f32696b8f94d17556d2b773d58089381b4f8d94ba6531ef286343462a0cb3db4ec6a0e85b95c91c690fb1c7a10bde3384bddfb7dbe93f8f1b710b57fba5c6e69e5343ed2c328bf06a1cfa652150ae8380bd46bdc850dd39f48fd33865a3b40a0bc838d9b8401a45cbceb4a53c7ef31e20d0d1c82a71080a2857d135a801f395b28b14cde66d740fbf59239cdcb69b1fb2f7e0dc1bedff10a49355153a48d341627263640f667393923732e4f0450ca3cea5043642e64de80409f091b7d16cb579dd985d3948bc7c83191f1db4ab3fe95ec15317c54a6dc1321754a3b492b2dced702fba9526ba9d1e69831a3175cbad6a673b7fef3dd9c63f69fa68ef87ff14ca6dc95f1ca0917e417bbadc226ca321cee7ae3650d54581c36c8b8f7a13cf0a174c4c16b977a82e958be0d13e032d468beb6e8c025182bf974fd43a8fcdd1efbbb515d263c6b86836bf57630b1e049f5f39b1c1c84049790c1d686921ae02012b86fdfaf7f999489ce8ec9ad4c64207f6230c49b876a474e04984957528f7fcb6319f42e2fdca69f4edec423f4fb4c1d377d1356e9cfd7e74926331bbd1383c1d4698d521732518f1bd0973c2222785e8314b57a7dfeef7f8ba681e686084c2d8c1439debd2b98e102c6de374f656bff03f5dd76976a46afa66640467f67323871804c3047596bb219a28cabf1d192d2ff3c6e5d547882090ddd86b0fe1f42b60d1084c04e855997afc5a39a10746614707d7e064a68190db4195e3a516a90ccf4c21179e61030286fd719f41e0c7927cf3cf74568ee1836e9c52e1569277c81bf8e28e07c77aa347b40b7983ce0c3f4c5e0b725967b35149d42c96caf4c763c35b498a880787aec9f5af703b74cce6f649008f2b5c9291822689652dfd3bfccd0d4e51c7d79c3b6a34c1ea19c9e6bc69f649fc91511eb02098d3ae0c3517a82cd59f980bf563a0904cdfe0dba3031ab2d5f88f4bad28ee1d4b2d08cd898f42f33166852830f57988d8cf17422f095718722d8217c28e32568ad4503354094ae94b75ed36bf395e9b46cc9503fabbf175f9581527f9214df914931b20686dff0a3cb5feb1c067da7de1f0eeb5cd1ec56968d2db4cf276b56d69dd47dc8bfcf57008471318183333a25d4bfe4f4afeae8b75bd69ff0382e4e1d7d016f87f3b7e35509c81a7194c92e1dc437073dbc9be39bd06424375a56d0a9721668185557d6c853c9057b2d55983bfae523abbcdc05c22075d581877a3c93b4e3f1d51770c5dc74a75586f51e2a673add60f1d7e1c3bde7be9ecb2c02e5811794ea216288ad0037bc88c3903dbb23a1d3c9d8829cb949517a1d7177212ff3e1ca1941e4e80119a362aab7635b6f930f62cda43ba81e657bed8ea418afa8ed90bd83ca225ac5935259c89b59bbc4e6abee071b0fa5d5ecbeb3b9d9b9f8e098c228ded516a7f42606ccd7451a8c17a09da3445f2d6a069d1c39cb492d12e761379605929027c474768ed7f23007e13f0be2afb77a6d0485ea38ef3de98a0254ec535c8fe9c0f7f2c13429d22296ff5d756e0054d8cd7ed251ba16497623c86d6b220afdd9c67ba8dc72088eadbdb9b19f131f8eb2c1758d8bd66909e18672e7dfc101b0ef1cf094ab334643a7207722241037b7eec23cb185003defa903b5b595a9afd5f5c2758b493a03554610afb47d31c7744c92bc5572e75852ed6499215dfc3621e790b302f5e0d671bd8f7367c3154815c14635e5e5bdb363ec1d19bd7b12e835882f6f4af046adec959fb855c4aaf8411f84ffcdc285641bfa43129e221a78271c256ceeea56a65b18134ed6ce6e4a1933f454f314856fe0a23a1fc2e9c7ce12b8b31fdefdd4fe2399584004b1df04b45194f9fde76eae0034e9a5639b59a0e4ec31a961c36aa9b66960e8692ef23ef9a86c838c5dc685b9f6157cd14705055901d93a65fc8c6928db31e2208e697dc9bdb34ad2e5b640b594f1b6942efc66f4f1685311baf80f7a1fe3550d88242d9dce1844cc5c80d102188dda8c020e69e3b91d1c4bb22aa68b19e1d09382262f86334223e3b48f2b4b08c8c00033140d6e64389a90ae5c24034ee028c453be303a299792a94466b2e5f8e286ee89d0afef2ebe71413b7f8c61b3d4b94af464783f34246d23e603525794d76c4c47fe7ad17f97099e7d9143acb467efe39ef503e3c47609a551f707ef7dd8bdd929e2880eb1dda0fb7e53b709ea4c1121a5ae1af99929678d03c99d302a464763a7f24e393d3c71865f97774ed5219bdb318289b61a5a26e46fd199ccd3487145818c85a352cc690f7900500b8ad73575956a1954cd0cf30d4d103d82d05ad5ff66cbe7c599ccaa074807a251bb5c4442c85b1a581b8934fa9b7f77e2e73c8668735447a0c48f2c6ddf3544b832bb6fc483d97ab0599d16c29461d2351f7ec1e235d4c1c359ce1a67109ae77fec2c42dd5c50513da008edd56a6b001909405b9b8d7734f7e55b50e5130c0df71d17fb3338868d075a85c175e6782d0f31e853bb39fe4239c48c272ee88c5219228b2a1fa04c6eaab5e4f1a80d6194ffcf3885fdf9dd0bb9e1d3806eca1df015b8be2c1726880fb68a7e01193b8f73774e2e3de8e87742788846c2acd22fce136a8afc490d80429732d65905e451d3ecab00811811efbbfb2e5baa5c704ea8654ef26930d9440d5f5896f525842db1bffa70cd51c6e4cd3f89040e8bee77f990c75aac61b7f92b2b7a9e190c9e4cd30f743f07ef6329659a580f6971f7dc6964835ae914f3063dd04cdde80f3fafec2a865ac35b587d5341e4b59d7ff4f5a4bf0c3f2711581347b4b65a47c35fcc78e797350952f476fe3dfd5834578c039c59107b29f939784d2752a91c426315a5d8fd8983204aec02e7cff8c65af4aff652ecce37ec1b3e6497e0e93e0d719df2d1b1e950ded0f4b45279eb5767d521c8b1ed25796edc2388f1a0da8703d22e7d78a079c8e93c62c4f4fa65044faefb9461e38df17ee0ff514070f4f10e533e9885417d7103f7fddd70d644a0d3292ff466d6ed76d312069cda3cd90fdeb420b41d926d408c3ef15fc8c04fd744f986bbf38a4dd19bcf7f14275cb80339b08633eb5249dba6dc4fea9d07c6379fc425081c6ca6deb01144f6ecdc51f71bad6c0efb204bab6858fc79071942d4bd7f04470bc3f96d4ed2ba7b3420f01243305f4da579c7ae88c55f25a67f7a22a30e6716ccc710ac9286235ed202c565f09c249d5c176593f0181101ed06759b5c90141d819875e72e44b0ee4dbdf6f6d50c72a78ce37fcdf78a2e3fe42795b91233e3c8d32058ca8cd8be788a635990c9c85c6e585b74072eb126214e709a4e881d14ad656f60b8d323d2f9bfcb6959c50691c420e137559fdbf53d47b1558f7e5d37c0a412ace65081abd76a0aba9ec090fa73d8b14bba6602a38488d8094a6747bd99e582fc5d9023208eb2d5349d98f4fce2c7e6c7f03f3207dc78d3460989607636d7b9c907d1c1cccaec843d694f7b1d8a3b56655009856046d942cca8d49f336c9844f9b89b8c1841713d0438fd36c34c45af150eff3d6bba0f06ac72f53d7266cc7aaf4dfe3240e17800d01ac08fb81c45aac1140e136259b773fcad2043f6fa8c0968b12d051eb24900970070b8c4657a76900b213fd86573fe222b46e1742a83d061b796cca47875be83bb2759719a7a8d1c0319e5573426c6aae5fc59e8838732f349575781f776de4527513620702679c890bd3429428522a14ad524264bf31941935d12a5a247c9ed69d3fe9d98b54a020f8135f4958e10406e80df5ef1d454caf2db8d28867adf940f5170b774989800df6e4f0e4a4892748069374825b7f7cc35b4dfcb358ee6bf20251430405308b404bd585608a550277e310377ca246713124cd07a4d148c33efc7488b8a900e3aab08f7abbdddb0a4903a795bc448fbf4fc6e234ec81929fae750f38f4b87ca0885e07a96d3f865a59c238a81d07b7374b31168a68a3182aeaa37bea7addc681ce86645043d2b18004a554b920b186753c4e41e475c874bdf28e11de00a040684a5403bcde5383200dc8abb4cde1d3c089d1cef74f488482967c75f42d62d2d53e55b7c4639439808eaefd371b55871a366bc7d2987c6e15cef09fdbd3125a965aa533c34fa0361ff2b03b2bee56ffcf0f2e1cbbd55b0995e6a82cddb37e5d12fffcdbfc3e843f557bd1c8a2bd63b4d1bf5ccada4f41393921b7c6a605a31523db33183af0f490858140667459610da31f7e395bf4991ac54e1cece3cb15cd9b94e80e512f428b89651f298bebb4f83f945fd5c9623ffc1f749dae704afe1f9155509d013b8cbd180b6476e997a464e5bd88633c2ce1f4e442d109325e5da1338bcb9908fc8931a041e520ef2b9152b5607849b2fe60ee80aeb3a4e399c123ad478a93341d908512f7a02bf2af1c7954bdb043c3b11741f6d08b1fa77796c4ab9085210d734577bf4af4bddc8886048c1b8b8ddbbb09134cb411c1740ce3a5190a911f5612a9b16353ced488e1588bb670ba8d49d7d5ad2b006cddced890631a42b7fa37782fa2b511f8e03832123e9e3798e5f6e764d84eae78a0ad77984c4b19222492b6215dbd209702204095f63052e1b67500307260856b2a7a207063a646c956ea66535380234bfb43160ce0657d99cff640dbaaaa17f96f16263d66ddc618e9fb11bdf694046aa37e0f95255070c9e2dda257020a2f7283170287d0cac93e08b63a93772d9e2d23027efb3d70bbaa10246f7d276e46db4cad3c1a3fe16adb9720e3192ec6b607e9b41a38151367c8973e4648d67808134cd9a2e15745b6251e1fad19123f92a55a71e701665681e6871281d7e6e15eb6314478086d6e7c50a0d3ae17725a8835e935d3be4339890cecc47349de4c72d0fb372ff0a25b6d57d676930752e5beaae0bdc43adc450105ef276717c038cfbe72c456146ca887315fdb71e510bc5dd582fa9b03046c4758e2e02fb5f579e0af57bd7b079008f0af315f7b5af7e7bc6f47186d6fc1ae014073898e2bac45d35b9a8724c1c467d4d8be8d334d2a19d1565cd100518f5f58fab5f05f39b6d59c08564a14c4008fc186122febcad82a99f9fabd04af92beb6159569087028e3ff0a4569ac60feb3904d767f1ca44a49645e6fcdcd47eb052ebb44875fd93e4671831efdfade796b5ac606ff935742af0374f32c7481960d271921c44782711f0ecee8728ea10e6bcba20ada893f0a6845305f63b61a1743d6aa4a1b03461129d17e9a195511b87fa837bb893e715657c8ddca8cfbd75fcb1857bd50b25c7077f602d11dc89ebe4e2c475088ed0a0995a812248a565d7c0704b0ae72ecd45f5d1ebb4ff12ec57994f302d5734601e7aeadf8f58093f9f2147990ae3db836e2ac28a42575d784d10dbcc3b01465841f2c539dda695c681733dcef77ef55cc014473fa9c8a1c5386ace51ebdb3e687140f25e809bad0993fa09ffc05bf62c78db167041346dbcf39a4fac9564cef81c2f7f45fa19465ca2e540502b9a2483cb4c07bfc37bfe210fcd8ec87416bbf02520a0fe5b1a59cf1e8139998e00275f2b4b548a3aa5bddbf5396bac4877354ce1c421d75d0fb7220168c3652b1fa0fcc002ba1367e4875c252b9c75c48c61020e815c4055a97bcd46264b02e707f52f91f1a2dfb2687d26d3aff243350b387b114be14deb3862360ec0f65518e846304e87e975677d7551becd9f7281e202c5d894b071bd5184179d5a1bc8a2e3f005a3460886aef99989a9c59a9f5cbe9b452b0cb2a6d786e9d0f64e794af45f90bef906fec0c6626b6da236e71429a6bc14828384ce6e12f11d323b2e3d7e794a9d3ff0d005c5076b03ad4a799060337fd5af2eb2221ded6cec4d1c1e864f2bde273a6599f4e211a1621adb9731cdfe2cbd343eb296ad7085c76e71f1824a4861aa93d0082ac5da820f5ef13b73838eaf594c81583f833887b95fb3fe281914a5a555e06646cdfe081d917e47968abe80e62a7b88a37471e6322c31fb5b360f347885966d777f491e4027bf57bdef39a6d712f6dffb36e17862c4078c275f94c762271460bf19cec0c61c2e0a9fba3fc527d9b0e34aec48749c913773a61bf9f211bb0dea4c9e0c6bc780e829eb999372c75a7eae73e22f9d8a1c97e1e9c4856f2366a61e881c8a74f7477c5d797082d3c37b63b4f89cd80c7068abff7bf7c7bf0836165d7bec5085af68c6c758cad49c1dda713d94c8e210a4c99709c8de57a7ddc7e1644f7c13a9fa543448a18c3e3cde7003f90da8c20cb677e168afcee6d06a7a3f0512057a859348f46b7129ebf92edb1e3cbfd9296f4cdb9c82f3f4d154dcac338d7013906c5ca679c71d7b4be426e1f5cf11183be4916203672ac43216fa5b69cc5e60b579cc3b669cd906582a922a0b0261cb1a73fd19b723d0d30b2976e8a923ae2ea363878ae6acc6d19129e4b409963691737d1e3ea3aa2d646d31bdf6c69aafc8965b99d7d39f0b8ca77b7ed0c931415e0825ca1eac749eb8d654c03a64b6ad4025ab8ad3f98582c9d34ecb73d80a74125f39a10799abb46050cf171258f3cb54d3bb33e8b28df6c1b047ea70e82f1a2d4a0dfb4580fee3370bab93c7fd8f523c760c8ceb3323a894687d775cc28caa779d721eb816116367291249a1487d8b05da1abd19de4a17a68a6ca95b6aaa37a6976000e0c549148274fc53a46201426f871081617b5379c34ea2af761e05f1db5052d093e5e664c75270940c741d93c887f1f0f1c2b4a1f24343de2731383688e73c7e67c7f33b0f2248858bac49b14153ead813d817d3aed466e50a1bd6d5ee9b659a47befeeb4e7bffad436eae3948997ffef202192c18d98dbad4aac8727ba1e2b1", tag: "a160752911d435bdee3c97f3c2718ebe" },
];

pub const HMAC_KATS: &[MacKat] = &[
    MacKat { key: "0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b", msg: "4869205468657265", mac: "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7" },
    MacKat { key: "4a656665", msg: "7768617420646f2079612077616e7420666f72206e6f7468696e673f", mac: "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843" },
    MacKat { key: "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", msg: "dddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddddd", mac: "773ea91e36800e46854db8ebd09181a72959098b3ef8c122d9635514ced565fe" },
    MacKat { key: "a9462637c026fccb19f0617649d57593a81e95ebc9cbed66640dcf0f54afc6f656a46b6d2e221ce4539d9249db91dba5bda5f51488d735824dc6e844d41e4753", msg: "", mac: "f5e2b11135dd83241761e628c0549043f321e09d9ede23e053f139621cc3b3dc" },
    MacKat { key: "e7218f86c14d49304bf4bb971512c89ed788bbad46ead99ffd001c1e82afcfd09780a5b7a6dc3b8371061c3c76950f978458c8f7d22f719f66fd863a956d21b870", msg: "105811810357fc911546824644e85ee0db28b78fb89b455bea569461f8ddd281ad85f2fda89d14b90da0d584115c2e3c4bcde2dbbbc0ac178a3ec4012025f5f01292effc3dabd7746ee633abce97597dbbddb18a06a72e9b0e3534a8058445de826c6ea19cf3dfbc8f4533cdfb91694c6ebd8ba2ed6eecccf15030f4916962a290", mac: "0aa572a28a5872f7aa31e058eb59e8f4c6d03dfe80a17b21fdf1997ea3cec0dc" },
    MacKat { key: "3c7e7b87ac8ec9", msg: "8eaf31498bc195911bf337d182b621a3a0ee050f0a74300c21114cf99e3e9ff2111388ff64d244debc85b218cd79b251831ee8ee2810b183b9e741c32f595961a522e930cf1db8383ecfcbed0a4683c00e0e2bcde88c6bf9f52886a6e9e6fa4537729d3a32c43d2a70833c0ffcde9eaf3fa9fa47ed82e25877990b1851d8943e301b749c8f3a7d40b828909e30385754e9a69bbce6dfb80da6c3b44d910a63e2f360906f1b9feaca2a34c758b9cb5bf5fbdc908cbde0cdc1c34cdc3460d1a99c2a5334c9ae7e6fb71e464a258d4a8a38aa6325659a4322c96e5525cbe00e40943ef05cdc067435a028aa307cbe1b199fcfb056c0c90f661814c6e30ee732b97c9a40a42b33685b383649e718884187ad25acd78757faea5eb2803f42208f5bdbe384fcd4f24da27a22c33f366b52a4ef7337f008d83719996e828272366cf873129a223f03b5822d2d2fde3f44d0f01cf3efdc68fc179a438049e37b3db9fac48da04aa15bfb7e71ce506e172f468c941d2a918793f7859ec9dad2a3ce60050b82f9257536bce1082d6ea4e5a860ac88ed14acb7f8b97d9f871a6df96e39f32a40150f45aad3c0ea7e5f620ef5db75edfecd7bef7a369d3a88e5766a9fdcdc19c3b7154dbb684fc0830127dc698e3c8efa46a7232f2685193617fb2f2619977706579eaffaabd80360a1202916e2b401cf0f9dd0004c33080c51e645bb5736e705f82588478c7e08cfec4bd826326bf56669ab32adabfd4481618d9f66342b394e7395daffbd5de61a37c6af036dcf454c3f30594a416ee5c2b63a89d72d37d2e72596602339119a8162cae23664f6ca6818792428caf3791ac41d464ff693bcd7c531f743fb7fc8b61b8d0c574d76ce16157755982fa4e1906de2b3bb4f4ba55123c5163249daceb54b133b6c8fb858b7cdf78e753548d89bcf47c664176d25f4c8e27ee81715885b7fd106e757b3835ac4432dd23860afb89ef10e2a24adf427caab06fd03ec140c0175e2532768c35493b988206f0fac8188716b91e0b3317df2bf7212ec65dae2c999c5a01ccfd6c10be7ea0903d01344b6b46ff39d58864abbe77a759f09802c2c145622f070ac18e0c67846fd02faca50c759798ad1d6154f339daf60fbb129b60a77a176210a0c2da3790ed62eba6d3b8689bf60fb7c4b2af3be0221a4bfcf7d5f290867680b9eefa95b4a4ddefd57ea55f3916531cb0f8e22218ce3478f83b3df1cf254707140409562a95675cf3a1045a6b30d60d7dda66d033869a06c7448b8bbb0c39e25adfb52dd250cd8e753c3e785d208b7f04a301b469bd5a1f29eb82dddea9dfa25d359af192bb0725f9413f7b198d3032c0164c3ea77a6c32fa467b069f5d3655ebc9f2ab2298407812337d55fd533915a576e5b6dd8ef6dfa", mac: "fd2b1102d54d5433d20cd3b966ad21e80de9b7152012f56aa03e87bbb223ff8a" },
];

pub const HKDF_KATS: &[HkdfKat] = &[
    HkdfKat { ikm: "0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b", salt: "000102030405060708090a0b0c", info: "f0f1f2f3f4f5f6f7f8f9", okm: "3cb25f25faacd57a90434f64d0362f2a2d2d0a90cf1a5a4c5db02d56ecc4c5bf34007208d5b887185865" },
    HkdfKat { ikm: "0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b", salt: "", info: "", okm: "8da4e775a563c18f715f802a063c5a31b8a11f5c5ee1879ec3454e5f3c738d2d9d201395faa4b61a96c8" },
    HkdfKat { ikm: "dffec088cd31c32c522cac813739b693a8151ba952c681e5dd670aab2ca68ee4", salt: "bec2e4d5aaae0c49bf91967016", info: "ad120ce2f2dc13f34c40", okm: "55d8a268df85d3df256765bab4b7b80aef97a40cc36ef8781bf1d3fb77b049e9" },
    HkdfKat { ikm: "4f1bbb7ba54ee5e789e0032aadb9da8f9d6837a4e064b4292c954f31b6d44d7b", salt: "", info: "7814de87e1e48bd17e288da34b8f69d4179cbc5816811fb665e32df73c87a2032eacd67c682ec7ea9e75fcf11946006da1304b04c8165664c7a06e66d6a252b78abcf03500ed", okm: "6dc33d02e2c8d78042dfcd56547036de63f1fe51b764dfd04b5dbac59013b6781bb6651e4a0e9518464ad0bcefacc7cc6334b22049e26f52aa050b9f8d5490a6" },
];

pub const X25519_A_PRIV: &str = "c6bd4c4085f5adac655ce7f20aeaf043e4c2799995e5b202188afd81c3addf72";
pub const X25519_B_PRIV: &str = "a9bb9e7cc9f6b0caa3400640f085317ecf4e067095a4b3080569f48bf067d8e4";
pub const X25519_A_PUB: &str = "83f1e9a82ed517ba8701755cf5321098ccc31d2e2de660eaa3f9d1da89999b24";
pub const X25519_B_PUB: &str = "a2a2dfe830883b3e2eeb906a4fcd53e81decf64ebe34ca2281148d6d1405086e";
pub const X25519_SHARED: &str = "1decbe4bd11e29228e4a05cefc81a7bf3416bc54137912793631d0cf2716383b";
