"""Golden vectors frozen from tests/oracle.py before the generator existed."""

# first 64 SplitMix64 outputs per seed
RAW_DRAWS = {
    0: [
        0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f, 0xf88bb8a8724c81ec,
        0x1b39896a51a8749b, 0x53cb9f0c747ea2ea, 0x2c829abe1f4532e1, 0xc584133ac916ab3c,
        0x3ee5789041c98ac3, 0xf3b8488c368cb0a6, 0x657eecdd3cb13d09, 0xc2d326e0055bdef6,
        0x8621a03fe0bbdb7b, 0x8e1f7555983aa92f, 0xb54e0f1600cc4d19, 0x84bb3f97971d80ab,
        0x7d29825c75521255, 0xc3cf17102b7f7f86, 0x3466e9a083914f64, 0xd81a8d2b5a4485ac,
        0xdb01602b100b9ed7, 0xa9038a921825f10d, 0xedf5f1d90dca2f6a, 0x54496ad67bd2634c,
        0xdd7c01d4f5407269, 0x935e82f1db4c4f7b, 0x69b82ebc92233300, 0x40d29eb57de1d510,
        0xa2f09dabb45c6316, 0xee521d7a0f4d3872, 0xf16952ee72f3454f, 0x377d35dea8e40225,
        0x0c7de8064963bab0, 0x05582d37111ac529, 0xd254741f599dc6f7, 0x69630f7593d108c3,
        0x417ef96181daa383, 0x3c3c41a3b43343a1, 0x6e19905dcbe531df, 0x4fa9fa7324851729,
        0x84eb4454a792922a, 0x134f7096918175ce, 0x07dc930b302278a8, 0x12c015a97019e937,
        0xcc06c31652ebf438, 0xecee65630a691e37, 0x3e84ecb1763e79ad, 0x690ed476743aae49,
        0x774615d7b1a1f2e1, 0x22b353f04f4f52da, 0xe3ddd86ba71a5eb1, 0xdf268adeb6513356,
        0x2098eb73d4367d77, 0x03d6845323ce3c71, 0xc952c5620043c714, 0x9b196bca844f1705,
        0x30260345dd9e0ec1, 0xcf448a5882bb9698, 0xf4a578dccbc87656, 0xbfdeaed9a17b3c8f,
        0xed79402d1d5c5d7b, 0x55f070ab1cbbf170, 0x3e00a34929a88f1d, 0xe255b237b8bb18fb,
    ],
    1: [
        0x910a2dec89025cc1, 0xbeeb8da1658eec67, 0xf893a2eefb32555e, 0x71c18690ee42c90b,
        0x71bb54d8d101b5b9, 0xc34d0bff90150280, 0xe099ec6cd7363ca5, 0x85e7bb0f12278575,
        0x491718de357e3da8, 0xcb435c8e74616796, 0x6775dc7701564f61, 0x9afcd44d14cf8bfe,
        0x7476cf8a4baa5dc0, 0x87b341d690d7a28a, 0x6f9b6dae6f4c57a8, 0x2ac2ce17a5794a3b,
        0xa534a6a6b7fd0b63, 0xd0bad0da572baaf1, 0xae84379630af89ee, 0xe263183773ef6508,
        0x10e2c46865e98746, 0x14d7973c5c2a449c, 0x7ef1fd0ed1548fcd, 0x1f8410633ef306ac,
        0x497305c5d1aab99f, 0x0c43407dc177b6f7, 0x83f91ca7864a7135, 0xb6b9aeef0d2df7ab,
        0x0b331645445bcd27, 0xff6c67e81909778a, 0x990cd70b12c5d084, 0x962b1967c90789ba,
        0x65ace2685a072c6d, 0x70616f2f48dce01c, 0x40d6824e2ef3fc17, 0x879e2e2256feff0c,
        0x8b2e02445e4be0f5, 0xbf8c59bb003553c1, 0xd16aa4b296eb9d18, 0xab27a171be5b133c,
        0xdca0c749607e2c86, 0xb54b3c40881e2907, 0x3c821fbf59108163, 0xa7ff0d388687ffb2,
        0xde70d1019fc66081, 0xd6de6acd12c87e38, 0x530e0e6118e9685e, 0x28bff9ea304d9f96,
        0xe4d9303221373073, 0xe9a6100461edd57a, 0x4d4673ef77ba0574, 0x21af8cfd4c4cbee5,
        0x536000f4bd6ae8f8, 0xf0af3ce429ca1790, 0x64c70b0b0c5b4a8f, 0x167587272751ecaf,
        0x9b679c859acd7aaf, 0x27cd5f9ec8c694cc, 0xf55540b2bff06252, 0xe02852925a4dc852,
        0x86c5d1b05ce2ce14, 0x1180b23a1075b77f, 0xc09a1a817914ffbc, 0x88b894e1401ed25b,
    ],
    42: [
        0xbdd732262feb6e95, 0x28efe333b266f103, 0x47526757130f9f52, 0x581ce1ff0e4ae394,
        0x09bc585a244823f2, 0xde4431fa3c80db06, 0x37e9671c45376d5d, 0xccf635ee9e9e2fa4,
        0x5705b8770b3d7dd5, 0x9e54d738297f77ae, 0x3474724a775b19bf, 0x7e348a0e451650be,
        0x836ded897f3e46e6, 0x851f977347ed6db7, 0xaa47e31c02e78edc, 0x341452c54d7c33f2,
        0x1a83d752f35eba75, 0x7ed90003f67f9e1d, 0x17eadff448a86a07, 0xb05eca1a2972b860,
        0xf513444b6455a3e8, 0x12b3a6dd261f6e99, 0x998d8fb100ca15d5, 0x9eac75d45474c891,
        0x12fc33f229b7b950, 0x470ea7e37990e511, 0xbdf25b150620a835, 0xc9167e198fb9991f,
        0xf1222631cdc86d07, 0xb1b59f1b53585e43, 0xca376da14213d975, 0xd72c1692509d2c5e,
        0xa5a7fe4e63a4f49d, 0xc83b65023bcb7fde, 0xa3351c7fc9a4c255, 0x61492dc04af06e43,
        0x102267f0f38c5511, 0x441c09c50b29db41, 0xc2de56b8961d5f40, 0x178b25ac7ebbdf84,
        0x87bebc2706d02922, 0x28b7d294ce2b6939, 0x45e78cf4fe332d8c, 0xc6582fcba2a4af11,
        0xab155b91ff450033, 0x5246b314ecd58fca, 0x15a099069c7d64aa, 0x247b01271f2670d7,
        0x813f3c933ea15b6e, 0xf828b6a4c0f08cef, 0x5e402c0a9dd5bb41, 0x30415e8a6be95008,
        0x2781afb139cc2d24, 0x51f578ece4c68f5b, 0x06ad07051c9dfa35, 0xd28f82f00d3cd44b,
        0xaf080b41cdf27a01, 0x8e53b8da0059e8ba, 0xe00926ac0ba9b7b0, 0x084235b62dc64cba,
        0x42577fcef4571016, 0xf6fd4f0b3ac5ea86, 0x9c08f817bb9e9346, 0x0b7dcbd429a0baaa,
    ],
}

# first 64 bytes of the default stream (all 8-bit, no NUL)
DEFAULT_STREAM = {
    0: bytes.fromhex(
        "fba65f14534c8160879ce3d47c255df8b56cee7dfa0722dd435af6ad68e0987e"
        "91dc71839f2b395201c1f63d196e3e6ad3e6d802195264dbeb655211289daaab"
    ),
    1: bytes.fromhex(
        "602301519d45c46df1ce3a295ae9e3784c575a673e2801fc5ef5b9ed2fe1b658"
        "59931fd881accc502155ecae6b809a811e45a399b35e8450b8e4a4b1f13c4245"
    ),
    42: bytes.fromhex(
        "0e3e6d28fbeeecf929d212b6540b48514b8e3aa9df981fb921e2267a7770b626"
        "36d1fb86728105144de49b23277e7f563bab46096244aa404173da325bc1e959"
    ),
}

# printable stream, seed 9: first 16 bytes
PRINTABLE_SEED9 = b'(I(=D4<*6F@^DO1C'

# line mode, printable, max 10, seed 5, three lines
LINES_SEED5 = b'~\nB{gQf\n/Stx\n'
