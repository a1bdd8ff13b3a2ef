"""Generated from the symbolic background-metric build; do not edit by hand.

Regenerate with tools/generate_background_kernels.py; verified against the
live sympy build in tests/test_background.py."""
import numpy
from numpy import cos, sin

def gpol(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = (1/2)*Jp0*X0
    return (-1, 0, -x0, 1, x0, (B0*X0*(r - t) + r)**2,)

def dgpol(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = (1/2)*Jp0*X1
    x1 = -x0
    x2 = r - t
    x3 = X1*x2
    x4 = B0*X0
    x5 = 2*r + 2*x2*x4
    x6 = (1/2)*Jp1*X0
    return (0, 0, x0, 0, x1, -B0*x5*(X0 + x3), 0, 0, x1, 0, x0, x5*(B0*x3 + x4 + 1), 0, 0, -x6, 0, x6, B1*X0*x2*x5,)

def gamma_pol(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = Jp0**2
    x1 = r**2
    x2 = X0*r
    x3 = B0*x2
    x4 = 2*x3
    x5 = t*x4
    x6 = B0*X0
    x7 = 2*x1
    x8 = B0**2
    x9 = X0**2
    x10 = x8*x9
    x11 = x1*x10
    x12 = t**2
    x13 = x10*x12
    x14 = r*t
    x15 = 2*x14
    x16 = (x1 - x10*x15 + x11 + x13 - x5 + x6*x7)**(-1.0)
    x17 = (1/4)*x16
    x18 = X0*X1*x0*x17
    x19 = -x18
    x20 = X1*x1
    x21 = X1*x14
    x22 = B0*x9
    x23 = r*x22
    x24 = B0*x20
    x25 = X1*x12
    x26 = x16*(X0*x24 - X1*x5 - t*x22 + x2 + x20 - x21 + x23 + x25*x6)
    x27 = (1/2)*Jp0
    x28 = x26*x27*x6
    x29 = t*x6
    x30 = X0*x8
    x31 = x20*x30
    x32 = 2*t
    x33 = x16*(-B0*x21 - X1*x2*x32*x8 + r*x10 + r - t*x10 + x24 + x25*x30 - x29 + x31 + x4)
    x34 = -X0*x27*x33
    x35 = r**3
    x36 = 4*x35
    x37 = 12*x35
    x38 = B0**3
    x39 = X0**3
    x40 = x38*x39
    x41 = t*x1
    x42 = 24*x40
    x43 = t*x11
    x44 = r*x12
    x45 = r*x0
    x46 = B0**4
    x47 = X0**4*x46
    x48 = t**3
    x49 = 4*x48
    x50 = Jp1*x7
    x51 = B0*X1
    x52 = r**4
    x53 = 4*x52
    x54 = B0*x39
    x55 = t*x54
    x56 = 12*x47
    x57 = 4*Jp1
    x58 = x39*x8
    x59 = 2*x12
    x60 = B1*x7
    x61 = Jp0*x60
    x62 = x39*x46
    x63 = X1*x62
    x64 = X1*x30
    x65 = 12*x52
    x66 = x38*x9
    x67 = X1*x66
    x68 = 24*x35
    x69 = 16*x35
    x70 = 12*r
    x71 = Jp0*r
    x72 = B1*x71
    x73 = B1*x59
    x74 = x12*x20
    x75 = Jp0*x54*x73 - Jp1*x58*x59 - X0*x50 - 16*r*x48*x63 + 4*t**4*x63 + t*x23*x57 - 36*t*x35*x67 - t*x36*x51 - t*x63*x69 - t*x64*x68 - x0*x55 - x1*x22*x57 + 12*x12*x31 + x14*x57*x58 - x32*x72*x9 + x36*x47 - x41*x56 + x44*x56 + x45*x54 + x45*x9 - x47*x49 - x48*x67*x70 - x50*x58 + x51*x53 + x53*x63 + x54*x61 - 4*x55*x72 + x61*x9 + 24*x62*x74 + x64*x65 + x65*x67 + 36*x66*x74
    x76 = (1/2)*x16
    x77 = Jp0*X1*x76
    return (x19, x18, x28, x19, x34, -x17*(x10*x37 + x36*x6 + x37*x40 + 12*x40*x44 - x41*x42 - 12*x43 + x75), x19, x18, x28, x19, x34, -x17*(-12*x1*x29 + x10*x68 + x13*x70 + x36 - 36*x40*x41 - x40*x49 + x40*x69 + x42*x44 - 36*x43 + x6*x69 + x75), x77, -x77, -B0*x26, x77, x33, X0*x76*(-4*B1*t*x3 - B1*x15 - Jp0*x29 + Jp0*x3 + x6*x60 + x6*x73 + x60 + x71),)

def hbar_pol(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = r**3
    x1 = 16*x0
    x2 = B0*X0
    x3 = X0**2
    x4 = B0**2
    x5 = x3*x4
    x6 = 48*x0
    x7 = B0**3
    x8 = X0**3
    x9 = x7*x8
    x10 = r**2
    x11 = t**2
    x12 = 48*r
    x13 = x11*x12
    x14 = B0**4
    x15 = X0**4
    x16 = t**3
    x17 = Jp0**2
    x18 = X0*r
    x19 = 2*x18
    x20 = B0*t
    x21 = X0*x20
    x22 = X1*x10
    x23 = B0*x22
    x24 = X1*r
    x25 = r*x5
    x26 = X0*x4
    x27 = x22*x26
    x28 = X1*x11
    x29 = B0*x19 - X1*t*x19*x4 + r - t*x5 - x20*x24 - x21 + x23 + x25 + x26*x28 + x27
    x30 = x17*x3
    x31 = X1*r**4
    x32 = x14*x15
    x33 = 4*x10
    x34 = x11*x5
    x35 = 8*x10
    x36 = x18*x20
    x37 = t*x25
    x38 = x2*x35 + x33*x5 + x33 + 4*x34 - 8*x36 - 8*x37
    x39 = X1*(x30 + x38)
    x40 = -x30 + x38
    x41 = B0*r
    x42 = x20*x3
    x43 = x19*x20
    x44 = X0*x23 - X1*x43 - t*x24 + x18 + x2*x28 + x22 + x3*x41 - x42
    x45 = B1*Jp0
    x46 = x35*x45
    x47 = 16*x14
    x48 = 48*x31
    x49 = x3*x7
    x50 = B0*x8
    x51 = r*t
    x52 = x11*x22
    x53 = -16*B0*B1*Jp0*r*t*x8 - 16*B0*Jp1*x10*x3 - 16*B0*X1*t*x0 - 4*B0*t*x17*x8 + 8*B0*x30*x44 + 16*B0*x31 - 8*B1*Jp0*r*t*x3 - 2*Jp0**4*X1*x8 - 8*Jp1*X0*x10 + 16*Jp1*r*x42 - 8*Jp1*x10*x4*x8 - 8*Jp1*x11*x4*x8 + 16*Jp1*x4*x51*x8 - 96*X0*X1*t*x0*x4 - X0*X1*x17*x40 + X0*x17*x39 - 64*X1*r*x14*x16*x8 - 48*X1*r*x16*x3*x7 + X1*t**4*x47*x8 - 64*X1*t*x0*x14*x8 - 144*X1*t*x0*x3*x7 + 4*r*x30 - 48*t*x10*x14*x15 + x1*x32 + 48*x11*x27 + 8*x11*x45*x50 + x13*x32 - 16*x14*x15*x16 + 96*x14*x52*x8 - 8*x17*x29*x3 + 4*x17*x41*x8 + x26*x48 + x3*x46 + x31*x47*x8 + x46*x50 + x48*x49 + 144*x49*x52
    x54 = 2*x10
    x55 = x2*x54
    x56 = x10*x5 + x10 + x34 - 2*x37 - x43 + x55
    x57 = (1/16)/x56**2
    x58 = 64*x0
    x59 = Jp0*x56
    x60 = B1*x56
    x61 = 2*x60
    x62 = -Jp0*x56
    return (x57*(48*t*x10*x3*x4 + 96*t*x10*x7*x8 - x1*x2 - x13*x9 - x5*x6 - x53 - x6*x9), x57*(48*B0*X0*t*x10 - 96*r*x11*x9 + 144*t*x10*x3*x4 + 144*t*x10*x7*x8 - 96*x0*x5 - x1 - x12*x34 + 16*x16*x7*x8 - x2*x58 - x53 - x58*x9), -1/8*(2*Jp0**3*X1*x3*x56 + 8*Jp0*X0*x29*x56 + Jp0*X1*x40*x56 - 4*X0*(-B0*x18*x62 - r*x62 + x11*x2*x61 + x21*x62 - 4*x36*x60 - x51*x61 + x54*x60 + x55*x60) - 8*x2*x44*x59 - x39*x59)/x56**3,)

def ricci_pol(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = X0*r
    x1 = r**2
    x2 = X1*x1
    x3 = r*t
    x4 = X1*x3
    x5 = X0**2
    x6 = B0*x5
    x7 = r*x6
    x8 = t*x6
    x9 = B0*X0
    x10 = x2*x9
    x11 = t**2
    x12 = x11*x9
    x13 = B0*x0
    x14 = 2*x13
    x15 = t*x14
    x16 = X1*x12 - X1*x15 + x0 + x10 + x2 - x4 + x7 - x8
    x17 = x16**2
    x18 = B0**2
    x19 = x18*x5
    x20 = x1*x19
    x21 = x11*x19
    x22 = x1*x9
    x23 = x19*x3
    x24 = x1 - x15
    x25 = x20 + x21 + 2*x22 - 2*x23 + x24
    x26 = 4*x25
    x27 = x18*x26
    x28 = 8*r
    x29 = x25**2
    x30 = X1*x29
    x31 = B0*x30
    x32 = x16*x18
    x33 = 8*x32
    x34 = x25*x33
    x35 = x2*x33
    x36 = B0**3
    x37 = x36*x5
    x38 = x16*x37
    x39 = x28*x38
    x40 = 8*t
    x41 = x38*x40
    x42 = 8*x16
    x43 = X0*x36
    x44 = x42*x43
    x45 = x2*x44
    x46 = X1*x25
    x47 = x11*x44
    x48 = 16*x0
    x49 = x16*x36
    x50 = x48*x49
    x51 = 2*Jp1
    x52 = 4*x29
    x53 = 2*B1
    x54 = x3*x53
    x55 = x1*x53
    x56 = B1*t
    x57 = x13*x56
    x58 = -x25
    x59 = Jp0*r
    x60 = x22*x53
    x61 = x12*x53
    x62 = t*x9
    x63 = Jp0*x62
    x64 = Jp0*x13
    x65 = -x25*x54 + x25*x55 + x25*x60 + x25*x61 - x26*x57 - x58*x59 + x58*x63 - x58*x64
    x66 = Jp0*X1
    x67 = X0*x66
    x68 = x1*x52
    x69 = B0*X2
    x70 = X1**2
    x71 = x18*x70
    x72 = x11*x52
    x73 = 16*x30
    x74 = X0*x18
    x75 = t*x74
    x76 = 8*x29
    x77 = x3*x71
    x78 = X2*x74
    x79 = x18*x48
    x80 = x0*x18
    x81 = X2*x80
    x82 = x12 + x22 + x24 - x3
    x83 = B1*x82
    x84 = x67*x83
    x85 = -t*x76*x81 + x19*x52 + x26*x84 - x3*x52*x69 - x30*x51 + x30*x79 - x65*x67 + x68*x69 + x68*x71 + x68*x78 + x71*x72 + x72*x78 - x73*x75 - x76*x77
    x86 = (1/4)/x25**3
    x87 = x29**(-1.0)
    x88 = B0*x16
    x89 = B0*r
    x90 = B0*X1
    x91 = t*x90
    x92 = x26*x69
    x93 = x16*x40
    x94 = X0*x1
    x95 = X2*x27
    x96 = X1*t
    x97 = x27*x70
    x98 = B0*x2
    x99 = B0*x4
    x100 = r*x19
    x101 = t*x19
    x102 = x2*x74
    x103 = X1*x74
    x104 = x103*x11
    x105 = r + x100 - x101 + x102 + x104 + x14 - x62 - 2*x80*x96 + x98 - x99
    x106 = 4*x105
    x107 = 4*Jp0
    x108 = 16*B1
    x109 = x108*x16
    x110 = 8*x105
    x111 = x110*x59
    x112 = Jp0*x16
    x113 = x106*x112*x9
    x114 = x42*x59
    x115 = x108*x82
    x116 = x48*x56
    x117 = r**3
    x118 = 4*x117
    x119 = 12*x117
    x120 = X0**3
    x121 = x120*x36
    x122 = 24*x121
    x123 = t*x1
    x124 = t*x20
    x125 = 12*r
    x126 = Jp0**2
    x127 = x126*x5
    x128 = B0**4
    x129 = X0**4
    x130 = x128*x129
    x131 = t**3
    x132 = 4*x131
    x133 = x1*x51
    x134 = r**4
    x135 = 4*x134
    x136 = x120*x126
    x137 = B0*t
    x138 = x136*x137
    x139 = 12*x1
    x140 = 4*Jp1
    x141 = x1*x6
    x142 = x120*x18
    x143 = Jp0*x5
    x144 = x120*x128
    x145 = X1*x144
    x146 = t**4
    x147 = 12*x134
    x148 = X1*x37
    x149 = t*x117
    x150 = x148*x149
    x151 = 24*x117
    x152 = r*x131
    x153 = x145*x152
    x154 = 16*x117
    x155 = B0*x120
    x156 = Jp0*x155
    x157 = x140*x3
    x158 = x11*x2
    x159 = 24*x144
    x160 = B1*x3
    x161 = -X0*x133 + r*x127 - t*x103*x151 - t*x130*x139 - t*x145*x154 + 12*x102*x11 + x103*x147 - x107*x155*x160 + x11*x125*x130 - x11*x142*x51 + x11*x156*x53 + x118*x130 - x118*x91 - x125*x131*x148 - x130*x132 - x133*x142 + x135*x145 + x135*x90 + x136*x89 - x138 - x140*x141 + x142*x157 - x143*x54 + x143*x55 + 4*x145*x146 + x147*x148 - 36*x150 - 16*x153 + x156*x55 + x157*x6 + x158*x159 + 36*x158*x37
    x162 = x11*x121*x125 + x118*x9 + x119*x121 + x119*x19 - x122*x123 - 12*x124 + x161
    x163 = x121*x123
    x164 = t*x22
    x165 = x11*x122
    x166 = r*x165 + x118 - x121*x132 + x121*x154 - 36*x124 + x125*x21 + x151*x19 + x154*x9 + x161 - 36*x163 - 12*x164
    x167 = x115*x142
    x168 = x105*x40
    x169 = Jp0*x110
    x170 = x19*x2
    x171 = x26*x66
    x172 = Jp0*x42
    x173 = 32*x83
    x174 = x19*x4
    x175 = 16*Jp0*x105*x174 - Jp0*x121*x93 + Jp0*x142*x168 + Jp0*x26*x6 + X1*x115*x21 + r*x167 - t*x0*x33*x66 - t*x167 + x10*x115 - x10*x169 + x102*x172 + 8*x11*x38*x66 - x110*x21*x66 - x111*x142 + x114*x121 - x115*x13*x96 + x115*x170 + x13*x168*x66 + x13*x171 + x143*x2*x36*x42 - 16*x143*x4*x49 + x162*x66 - x166*x66 - x169*x170 - x171*x62 - x173*x174
    x176 = (1/8)*x87
    x177 = x105**2
    x178 = x105*x25
    x179 = 8*x178
    x180 = Jp0*X0
    x181 = x105*x108
    x182 = Jp0*x0
    x183 = 16*x59
    x184 = x105*x6
    x185 = x117*x74
    x186 = 48*x30
    x187 = x30*x37
    x188 = r*x11
    x189 = x26*x59*x83
    x190 = x25*x42
    x191 = x134*x46
    x192 = x126*x25
    x193 = 24*x16
    x194 = x191*x193
    x195 = x151*x25
    x196 = B0**5
    x197 = x129*x196
    x198 = Jp1*x190
    x199 = x128*x5
    x200 = x188*x25
    x201 = x120*x196
    x202 = x201*x42
    x203 = x120*x27
    x204 = B1*x112*x203
    x205 = x158*x25
    x206 = x16*x205
    x207 = Jp1*x105
    x208 = 24*x178
    x209 = x105*x143
    x210 = x131*x179
    x211 = x203*x207
    x212 = 72*x178
    x213 = 32*x178
    return (-x86*(t*x46*x50 - x0*x34 + x17*x27 - x25*x35 - x25*x39 + x25*x41 - x25*x45 + x28*x31 + x34*x4 - x46*x47 + x85), (1/4)*x87*(X0*x11*x95 - X1*x47 + x1*x92 + x1*x97 + x106*x88 + x11*x97 + x19*x26 - x25*x40*x81 - 8*x25*x77 + x26*x9 - x26*x91 - x28*x88 - x3*x92 - x32*x48 + x33*x4 - x35 - x39 + x41 - x45 - x46*x51 - 16*x46*x75 + x46*x79 + 12*x46*x89 + x50*x96 - x67*(-x54 + x55 - 4*x57 + x59 + x60 + x61 - x63 + x64) + x74*x93 + 4*x84 + x94*x95), x176*(32*B1*x16*x23 - x107*x17*x74 - x109*x20 - x109*x21 - x109*x22 - x111*x6 + x113 + x114*x19 + x115*x7 + x116*x88 + x175), -x86*(-x100*x179 + x101*x179 - x102*x179 - x104*x179 - 16*x13*x178 - 8*x137*x30 + x177*x26 - x178*x28 + x178*x79*x96 + x179*x62 - x179*x98 + x179*x99 + x52 + x73*x89 + x76*x9 + x85), -x176*(-x101*x172 + x105*x116 - x11*x181*x6 - x110*x182 - x113 - x115*x8 - x141*x181 + x16*x183*x19 + 32*x160*x184 + x169*x8 + x173*x7 + x175 + 4*x177*x180 + x180*x26 - x181*x94 + 8*x182*x88 - x183*x184 + x48*x83), x86*(4*B0*B1*Jp0*r*t*x16*x25*x5 + 4*B0*B1*Jp0*t*x120*x25*x82 + 4*B0*B1*Jp0*x1*x105*x120*x25 + 4*B0*B1*Jp0*x105*x11*x120*x25 + B0*Jp0*x16*x5*x65 + 4*B0*Jp1*X0*x1*x16*x25 + 8*B0*Jp1*r*t*x105*x25*x5 + 6*B0*Jp1*r*x29*x5 + 24*B0*X0*r*t*x29 + 32*B0*X0*x105*x117*x25 + 24*B0*X1*t*x1*x29 + 8*B0*X1*x105*x134*x25 + 2*B0*r*x105*x120*x126*x25 + 2*B0*x105*x126*x16*x25*x5 + 8*B1*Jp0*r*t*x120*x16*x18*x25 + 4*B1*Jp0*x1*x105*x25*x5 - B1*x112*x141*x26 + 6*Jp1*X0*r*x29 + 8*Jp1*r*t*x105*x120*x18*x25 + 4*Jp1*x1*x120*x16*x25*x36 + 8*Jp1*x1*x16*x18*x25*x5 + 4*Jp1*x11*x120*x16*x25*x36 - Jp1*x141*x179 - 6*Jp1*x29*x8 + 96*X0*X1*t*x1*x18*x29 + 48*X0*X1*t*x117*x16*x25*x36 + 24*X0*X1*x1*x105*x11*x18*x25 + 24*X0*X1*x105*x134*x18*x25 + 32*X1*r*x120*x131*x16*x196*x25 + 24*X1*r*x128*x131*x16*x25*x5 + 72*X1*t*x1*x29*x36*x5 + 32*X1*t*x117*x120*x16*x196*x25 + 72*X1*t*x117*x128*x16*x25*x5 + 8*X1*t*x117*x16*x18*x25 + 48*X1*x1*x105*x11*x120*x128*x25 + 72*X1*x1*x105*x11*x25*x36*x5 + 8*X1*x105*x120*x128*x134*x25 + 8*X1*x105*x120*x128*x146*x25 + 24*X1*x105*x134*x25*x36*x5 + 24*X1*x131*x29*x36*x5 + 48*r*t*x120*x29*x36 + 72*r*t*x18*x29*x5 + 48*r*x105*x11*x120*x25*x36 + 24*r*x105*x11*x128*x129*x25 + 24*r*x105*x11*x18*x25*x5 + 2*r*x105*x126*x25*x5 - 2*r*x136*x25*x32 + 48*t*x1*x120*x128*x16*x25 + 24*t*x1*x129*x16*x196*x25 + 24*t*x1*x16*x25*x36*x5 + 2*t*x120*x126*x16*x18*x25 - x1*x122*x29 - x1*x204 - x1*x211 - 48*x103*x149*x178 + 32*x105*x117*x120*x25*x36 + 8*x105*x117*x128*x129*x25 + 48*x105*x117*x18*x25*x5 + 8*x105*x117*x25 + x105*x166*x25 - x11*x186*x80 - x11*x204 - x11*x211 - x117*x179*x91 - x117*x190*x197 - x121*x198*x3 - x121*x210 - x123*x130*x208 - x124*x212 - x127*x177*x25 - x127*x29 + 8*x129*x131*x16*x196*x25 - x130*x210 - 2*x138*x178 - x139*x29 - x144*x16*x195 - x145*x149*x213 - x146*x202*x46 - x148*x152*x208 - x150*x212 - x151*x187 - x151*x31 - x153*x213 - x155*x189 - x156*x160*x179 - x159*x16*x200 - 2*x16*x192*x7 - x160*x209*x26 - x162*x25*x88 - x163*x212 - x164*x208 - x165*x29 - x17*x19*x192 - x185*x186 - x185*x190 - 72*x187*x188 - x189*x5 - x191*x202 - x191*x33 - x193*x197*x200 - x193*x205*x43 - x194*x199 - x194*x43 - x195*x38 - x198*x23 - 72*x199*x206 - 60*x20*x29 - 48*x201*x206 - x207*x26*x94 - x209*x65 - 12*x21*x29 - 48*x22*x29),)

def gcart(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = sin(th)
    x1 = (1/2)*X0
    x2 = Jp0*x1/r
    x3 = cos(th)
    x4 = r**2
    x5 = x4**(-1.0)
    x6 = x0**2
    x7 = x4*x6
    x8 = B0**2
    x9 = X0**2*x8
    x10 = t**2
    x11 = x10*x9
    x12 = 2*X0
    x13 = B0*x12
    x14 = Jp0*r
    x15 = x0*x3
    x16 = X0*x15
    x17 = x14*x16
    x18 = r*t
    x19 = x18*x6
    x20 = 2*x9
    x21 = x3**2
    x22 = x21*x4
    x23 = x22 + x7
    x24 = 4*B0
    x25 = x15*x4
    x26 = x12*x8
    x27 = x18*x21
    return (-1, x0*x2, -x2*x3, x5*(x11*x6 - x13*x19 + x13*x7 - x17 - x19*x20 + x23 + x7*x9), -x1*x5*(x10*x15*x26 - x14*x21 + x14*x6 - x15*x18*x24 - 4*x16*x18*x8 + x24*x25 + x25*x26), x5*(x11*x21 + x13*x22 - x13*x27 + x17 - x20*x27 + x22*x9 + x23),)

def dgcart(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = sin(th)
    x1 = Jp0*x0
    x2 = (1/2)*X1/r
    x3 = cos(th)
    x4 = Jp0*x3
    x5 = X0*r
    x6 = 2*x0
    x7 = B0*x6
    x8 = x5*x7
    x9 = X1*r
    x10 = t*x9
    x11 = r**2
    x12 = X1*x11
    x13 = x12*x7
    x14 = B0**2
    x15 = X0**2
    x16 = x15*x6
    x17 = x14*x16
    x18 = t*x14
    x19 = x16*x18
    x20 = 4*x0
    x21 = X0*x18
    x22 = x20*x21
    x23 = X0*x14
    x24 = x23*x6
    x25 = t**2
    x26 = x24*x25
    x27 = x11**(-1.0)
    x28 = x0*x27
    x29 = x0**2
    x30 = Jp0*x29
    x31 = x3**2
    x32 = Jp0*x31
    x33 = r*x3
    x34 = x0*x33
    x35 = 4*B0
    x36 = X0*x35
    x37 = x34*x36
    x38 = x0*x3
    x39 = x35*x38
    x40 = x12*x39
    x41 = x14*x15
    x42 = x20*x33
    x43 = x15*x18
    x44 = 4*x38
    x45 = 8*x21*x38
    x46 = x23*x44
    x47 = X1*x23
    x48 = x25*x44
    x49 = (1/2)*x27
    x50 = 2*x33
    x51 = B0*X0
    x52 = x50*x51
    x53 = 2*x3
    x54 = B0*x53
    x55 = x12*x54
    x56 = 4*x21
    x57 = x3*x56
    x58 = x23*x53
    x59 = x25*x53
    x60 = X0 - x9
    x61 = Jp1*x0
    x62 = X0*(x4 + x61)
    x63 = X0*(-Jp1*x3 + x1)
    x64 = r**3
    x65 = x64**(-1.0)
    x66 = X1*x64
    x67 = r*x19 - t*x13 + t*x8 - x12*x22 - x12*x4 - x17*x25 + x24*x66 + x26*x9 + x4*x5 + x66*x7
    x68 = r*x29
    x69 = Jp0*x68
    x70 = r*x32
    x71 = x33*x61
    x72 = 2*B1
    x73 = t*x68
    x74 = t*x34
    x75 = x35*x74
    x76 = x11*x29
    x77 = x72*x76
    x78 = x11*x38
    x79 = x35*x78
    x80 = x35*x73
    x81 = B1*X0
    x82 = x25*x51*x72
    x83 = x21*x42
    x84 = x11*x24*x3
    x85 = x26*x3
    x86 = X0*(x29*x82 + x51*x77 + x69 - x70 - x71 - x72*x73 - x75 + x77 + x79 - x80*x81 - x83 + x84 + x85)
    x87 = x23*x9
    x88 = -X0*x69 + X0*x70 + t*x37 - t*x40 + x12*x30 - x12*x32 - x12*x45 + x39*x66 - x41*x48 + x42*x43 + x46*x66 + x48*x87
    x89 = r*x31
    x90 = t*x89
    x91 = x35*x90
    x92 = 4*B1
    x93 = x11*x31
    x94 = 2*x23
    x95 = x25*x94
    x96 = X0*(B1*x25*x36*x38 - 8*B1*x51*x74 + Jp1*x68 - Jp1*x89 + r*x20*x4 - x29*x95 + x31*x95 - x35*x76 + x35*x93 + x56*x68 - x56*x89 - x74*x92 - x76*x94 + x78*x92 + x79*x81 + x80 - x91 + x93*x94)
    x97 = (1/2)*x65
    x98 = t*x52 - t*x55 + x1*x12 - x1*x5 - x12*x57 - x41*x59 + x43*x50 + x54*x66 + x58*x66 + x59*x87
    x99 = x72*x93
    x100 = X0*(x31*x82 + x51*x99 - x69 + x70 + x71 - x72*x90 + x75 - x79 - x81*x91 + x83 - x84 - x85 + x99)
    return (0, -x1*x2, x2*x4, -x28*(X1*x26 + r*x17 - x10*x7 + x12*x24 + x13 - x19 - x22*x9 - x4*x9 + x8), x49*(-x10*x39 + x12*x46 + x30*x9 - x32*x9 + x37 + x40 + x41*x42 - x43*x44 - x45*x9 + x47*x48), -x27*x3*(x1*x9 - x10*x54 + x12*x58 + x41*x50 - x43*x53 + x47*x59 + x52 + x55 - x57*x9), 0, -1/2*x28*(x4*x60 + x62), x49*(-x0*x63 + x32*x60), -x0*x65*(-x3*x67 + x86), -x97*(-x0*x96 + x3*x88), -x65*(x0*x100 - x31*x98), 0, -x49*(-x3*x62 + x30*x60), x3*x49*(x1*x60 + x63), x65*(x29*x67 + x3*x86), -x97*(x0*x88 + x3*x96), x3*x65*(x0*x98 + x100),)

def ddgcart(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = sin(th)
    x1 = Jp0*x0
    x2 = (1/2)*X2/r
    x3 = cos(th)
    x4 = Jp0*x3
    x5 = X1*r
    x6 = 4*B0
    x7 = x5*x6
    x8 = X2*r
    x9 = 2*x0
    x10 = B0*x9
    x11 = t*x8
    x12 = r**2
    x13 = X2*x12
    x14 = B0*x13
    x15 = x14*x9
    x16 = B0**2
    x17 = X0**2
    x18 = x16*x17
    x19 = x18*x9
    x20 = X0*x0
    x21 = 8*x16
    x22 = x21*x5
    x23 = x20*x22
    x24 = t*x20
    x25 = X1*x21
    x26 = x16*x24
    x27 = 4*x26
    x28 = 2*X0
    x29 = x16*x28
    x30 = x13*x29
    x31 = t**2
    x32 = x0*x31
    x33 = x29*x32
    x34 = 4*r
    x35 = X1**2*x16
    x36 = t*x35
    x37 = x0*x36
    x38 = x35*x9
    x39 = x12*x38
    x40 = x31*x38
    x41 = x12**(-1.0)
    x42 = x0*x41
    x43 = x0**2
    x44 = Jp0*x43
    x45 = x3**2
    x46 = Jp0*x45
    x47 = x0*x3
    x48 = 8*x47
    x49 = B0*x5
    x50 = x47*x6
    x51 = x13*x50
    x52 = 4*x18
    x53 = x47*x52
    x54 = 16*x3
    x55 = x16*x20
    x56 = x5*x55
    x57 = x24*x3
    x58 = x21*x57
    x59 = 4*x55
    x60 = x13*x3
    x61 = x3*x31
    x62 = 4*x61
    x63 = x55*x62
    x64 = x36*x48
    x65 = x12*x47
    x66 = 4*x65
    x67 = x35*x66
    x68 = 4*x31
    x69 = x35*x47
    x70 = (1/2)*x41
    x71 = 2*x3
    x72 = B0*x71
    x73 = x14*x71
    x74 = x18*x71
    x75 = X0*x3
    x76 = x22*x75
    x77 = t*x75
    x78 = x16*x75
    x79 = x29*x31
    x80 = x3*x79
    x81 = r*x3
    x82 = 4*x81
    x83 = x35*x71
    x84 = x12*x83
    x85 = x31*x83
    x86 = X1 - x8
    x87 = Jp1*x0
    x88 = x4 + x87
    x89 = X1*x88
    x90 = Jp0*x86
    x91 = Jp1*x3
    x92 = x1 - x91
    x93 = X1*x92
    x94 = x4*x5
    x95 = r*x28
    x96 = B0*x0
    x97 = x95*x96
    x98 = 2*x5
    x99 = t*x98
    x100 = X1*x12
    x101 = x10*x100
    x102 = r**3
    x103 = X2*x102
    x104 = x10*x103
    x105 = r*x19
    x106 = t*x52
    x107 = x0*x106
    x108 = 4*x100
    x109 = X1*x68
    x110 = x103*x29
    x111 = 4*x12
    x112 = r*x40 - t*x15 + x0*x110 + x101 + x102*x38 + x104 - x105 + x107 + x108*x55 - x109*x55 - x111*x37 - x13*x27 - x13*x4 + x33*x8 + x94 + x96*x99 - x97
    x113 = x44*x5
    x114 = B1*x95
    x115 = x114*x43
    x116 = x46*x5
    x117 = x6*x81
    x118 = x117*x20
    x119 = x5*x87
    x120 = x119*x3
    x121 = B1*x43
    x122 = t*x7
    x123 = x122*x47
    x124 = 2*B1
    x125 = x100*x43
    x126 = x124*x125
    x127 = x100*x50
    x128 = r*x43
    x129 = B1*x17
    x130 = x129*x6
    x131 = t*x6
    x132 = x131*x17
    x133 = X0*t
    x134 = 8*B1
    x135 = x134*x49
    x136 = x133*x135
    x137 = r*x53
    x138 = t*x53
    x139 = X0*x6
    x140 = B1*x139
    x141 = x31*x43
    x142 = X1*x140
    x143 = x22*x57
    x144 = x100*x3
    x145 = x144*x59
    x146 = X1*x63
    x147 = x113 + x115 - x116 + x118 - x120 - x121*x132 - x121*x99 - x123 + x125*x140 + x126 + x127 + x128*x130 - x136*x43 + x137 - x138 + x141*x142 - x143 + x145 + x146
    x148 = x102**(-1.0)
    x149 = x0*x148
    x150 = x103*x50
    x151 = 4*x102
    x152 = t*x48
    x153 = x152*x18
    x154 = x20*x61
    x155 = x3*x59
    x156 = x20*x21
    x157 = x21*x24
    x158 = -x113 + x116 - x118 + x123 - x137
    x159 = -t*x51 + x103*x155 + x127 + x13*x44 - x13*x46 + x144*x156 + x150 + x151*x69 + x153 - x154*x25 - x157*x60 + x158 + x31*x34*x69 - 8*x36*x65 + x63*x8
    x160 = Jp1*x5
    x161 = x128*x139
    x162 = r*x45
    x163 = x139*x162
    x164 = B1*x82
    x165 = 4*x0
    x166 = B1*x47
    x167 = 4*x166
    x168 = x125*x6
    x169 = x100*x45
    x170 = x169*x6
    x171 = x108*x166
    x172 = B0*x134
    x173 = x17*x172
    x174 = x173*x47
    x175 = 16*B0
    x176 = B1*x175
    x177 = x106*x45
    x178 = x133*x22
    x179 = x154*x172
    x180 = 4*X0
    x181 = x16*x180
    x182 = X1*x181
    x183 = x31*x45
    x184 = X1*x179 + r*x174 - t*x167*x5 - t*x174 + x106*x43 + x122*x43 - x122*x45 - x125*x181 - x128*x52 - x141*x182 + x144*x172*x20 + x160*x43 - x160*x45 - x161 + x162*x52 + x163 + x164*x20 + x165*x94 - x168 + x169*x181 + x170 + x171 - x176*x5*x57 - x177 + x178*x43 - x178*x45 + x182*x183
    x185 = (1/2)*x148
    x186 = B0*x28
    x187 = x186*x81
    x188 = -x1*x5
    x189 = B0*x3
    x190 = x100*x72
    x191 = x103*x72
    x192 = r*x74
    x193 = x16*x77
    x194 = 4*x193
    x195 = x111*x3
    x196 = r*x85 - t*x73 + x1*x13 + x102*x83 + x106*x3 + x108*x78 - x109*x78 + x110*x3 - x13*x194 - x187 + x188 + x189*x99 + x190 + x191 - x192 - x195*x36 + x8*x80
    x197 = x114*x45
    x198 = x124*x169
    x199 = B1*x45
    x200 = x120 - x127 + x130*x162 - x132*x199 - x136*x45 + x138 + x140*x169 + x142*x183 + x143 - x145 - x146 + x158 + x197 + x198 - x199*x99
    x201 = X0*x88
    x202 = x13 + x28 - x98
    x203 = X0*x4
    x204 = X0*x87
    x205 = -x119 + x203 + x204 - x94
    x206 = Jp2*x0
    x207 = -x1 + x206 + 2*x91
    x208 = X0 - x5
    x209 = x201*x3 + x205*x3
    x210 = X0*x1
    x211 = -X0*x91 + x188 + x210 + x5*x91
    x212 = x0*x211
    x213 = X0*x92
    x214 = x0*x213
    x215 = x212 + x214
    x216 = x0*x4
    x217 = x208*x216
    x218 = -Jp2*x3 + x4 + 2*x87
    x219 = r**4
    x220 = x219**(-1.0)
    x221 = r*x203
    x222 = X1*x102
    x223 = x100*x4
    x224 = x0*x29
    x225 = -t*x101 + t*x105 + t*x97 + x10*x222 - x108*x26 - x19*x31 + x221 + x222*x224 - x223 + x33*x5
    x226 = r*x44
    x227 = r*x46
    x228 = x81*x87
    x229 = t*x128
    x230 = r*t
    x231 = x230*x50
    x232 = x12*x43
    x233 = x6*x65
    x234 = t*x161
    x235 = B1*x186
    x236 = x26*x82
    x237 = x29*x65
    x238 = x47*x79
    x239 = X0*(-B1*x234 - x124*x229 + x124*x232 + x141*x235 + x226 - x227 - x228 - x231 + x232*x235 + x233 - x236 + x237 + x238)
    x240 = x239*x3
    x241 = x222*x43
    x242 = x229*x6
    x243 = B0*X0
    x244 = x134*x243
    x245 = t*x244
    x246 = B1*X0
    x247 = x246*x7
    x248 = x100*x44
    x249 = x100*x46
    x250 = -X0*x226 + X0*x227 + r*x138 - t*x127 + x117*x24 - x144*x157 + x155*x222 + x222*x50 + x248 - x249 - x31*x53 + x5*x63
    x251 = -x144*x87 + x204*x81 + x250
    x252 = t*x115 - t*x126 + x124*x241 - x125*x245 + x129*x242 - x130*x141 + x140*x241 + x141*x247 + x251
    x253 = x252*x3
    x254 = Jp1*r
    x255 = x254*x45
    x256 = 2*x255
    x257 = 2*B2
    x258 = x254*x43
    x259 = 2*x258
    x260 = x206*x81
    x261 = B1**2
    x262 = x261*x28
    x263 = x134*x65
    x264 = x230*x47
    x265 = x134*x264
    x266 = x180*x261
    x267 = B2*x186
    x268 = x134*x189*x20
    x269 = x12*x268
    x270 = x24*x81
    x271 = x176*x270
    x272 = x232*x6
    x273 = x12*x45
    x274 = x273*x6
    x275 = t*x162
    x276 = x275*x6
    x277 = x232*x29
    x278 = x43*x79
    x279 = x273*x29
    x280 = x45*x79
    x281 = x216*x34
    x282 = x181*x275
    x283 = x181*x229
    x284 = x242 - x272 + x274 - x276 - x277 - x278 + x279 + x280 + x281 - x282 + x283
    x285 = -B2*x234 + x141*x262 + x141*x267 + x179 - x229*x257 - x229*x266 + x232*x257 + x232*x262 + x232*x267 - x256 + x259 - x260 + x263 - x265 + x269 - x271 + x284
    x286 = r*x6
    x287 = X2*x219
    x288 = 6*x18
    x289 = x100*x21
    x290 = -r*x107 - t*x104 + x0*x100*x131 + x10*x287 - x103*x27 - x103*x4 - x151*x37 + x219*x38 + 2*x223 + x224*x287 - x23*x31 - x24*x286 + x24*x289 + x288*x32 + x30*x32 + x31*x39 - x4*x95
    x291 = t*x34
    x292 = B1*x6
    x293 = x12*x3
    x294 = x20*x293
    x295 = B1*x66 + x154*x292 - x166*x291 - x172*x270 - x255 + x258 + x284 + x292*x294
    x296 = x20*x295
    x297 = 8*x270
    x298 = B0*x297
    x299 = x31*x47
    x300 = 16*x26
    x301 = B0*x100*x152 - r*x153 - t*x150 - x102*x64 + x103*x44 - x103*x46 - x103*x58 + x13*x63 + x144*x300 + x155*x287 + 12*x18*x299 + 4*x219*x69 + x226*x28 - x227*x28 - 2*x248 + 2*x249 + x287*x50 - x298 + x31*x67 - 16*x56*x61
    x302 = Jp1*x100
    x303 = t*x163
    x304 = x222*x45
    x305 = x181*x5
    x306 = x133*x21
    x307 = B0*x17*x265 + X0*x255 - X0*x258 + r*x177 + t*x168 - t*x170 - t*x171 - x106*x128 + x108*x216 + x125*x306 + x135*x154 - x141*x305 + x141*x52 - x144*x176*x24 + x164*x24 - x165*x221 + x167*x222 - x169*x306 - x173*x299 - x181*x241 + x181*x304 + x183*x305 - x183*x52 + x222*x268 - x234 - x241*x6 + x302*x43 - x302*x45 + x303 + x304*x6
    x308 = x0*x307
    x309 = x295*x75
    x310 = Jp2*r
    x311 = x134*x232
    x312 = x134*x273
    x313 = x175*x246
    x314 = B2*x6
    x315 = x20*x261
    x316 = -B2*x291*x47 - B2*x298 + B2*x66 + x134*x229 - x134*x275 - x141*x244 + x154*x314 - x156*x293 - x156*x61 + x175*x264 - x175*x65 + x183*x244 + x195*x315 - 4*x226 + 4*x227 + 8*x228 + x229*x313 - x243*x311 + x243*x312 - x261*x297 - x275*x313 + x294*x314 + x300*x81 + x310*x43 - x310*x45 - x311 + x312 + x315*x62
    x317 = (1/2)*x220
    x318 = x1*x100
    x319 = x29*x3
    x320 = -t*x191 + x1*x103 + x1*x95 - x103*x194 - x106*x81 + x13*x80 + x131*x144 - x151*x3*x36 + x219*x83 - x286*x77 + x287*x319 + x287*x72 + x288*x61 + x289*x77 - x31*x76 + x31*x84 - 2*x318
    x321 = -t*x197 + t*x198 - x124*x304 - x129*x276 + x130*x183 - x140*x304 + x169*x245 - x183*x247 + x251
    x322 = X0*(-B1*x303 + x124*x273 - x124*x275 + x183*x235 - x226 + x227 + x228 + x231 - x233 + x235*x273 + x236 - x237 - x238)
    x323 = x0*x321 + x0*x322
    x324 = -r*x210 + t*x187 - t*x190 + t*x192 - x108*x193 + x222*x319 + x222*x72 - x31*x74 + x318 + x5*x80
    x325 = -B2*x303 - x179 + x183*x262 + x183*x267 - x242 + x256 + x257*x273 - x257*x275 - x259 + x260 + x262*x273 - x263 + x265 - x266*x275 + x267*x273 - x269 + x271 + x272 - x274 + x276 + x277 + x278 - x279 - x280 - x281 + x282 - x283
    x326 = -x202*x44 + x209
    x327 = x0*x201 + x0*x205 - x207*x75 + x217
    x328 = x1*x202 + x211 + x213
    x329 = x208*x46
    x330 = x218*x75
    x331 = -x240 + x253 + x290*x43
    x332 = -x0*x239 + x0*x252 + x225*x47 + x285*x75
    x333 = x0*x301 + x3*x307 - x309
    x334 = x250*x3 - x296 + x308 + x316*x75
    x335 = -x0*x320 + x321 + x322
    x336 = x323 - x324*x45 - x325*x75
    return (0, x1*x2, -x2*x4, x42*(X2*x33 + x0*x30 + x0*x7 - x10*x11 + x15 + x19 + x23 - x24*x25 - x27*x8 - x34*x37 + x39 - x4*x8 + x40), -x70*(-X1*x26*x54 + X2*x63 - r*x64 - x11*x50 + x44*x8 - x46*x8 + x48*x49 + x51 + x53 + x54*x56 - x58*x8 + x59*x60 + x67 + x68*x69), x3*x41*(X2*x80 + x1*x8 - x11*x72 - 4*x11*x78 - x25*x77 + x3*x30 + x3*x7 - x36*x82 + x73 + x74 + x76 + x84 + x85), 0, (1/2)*x42*(x4*x86 + x89), -x70*(-x0*x93 + x45*x90), x149*(-x112*x3 + x147), x185*(-x0*x184 + x159*x3), -x148*(-x0*x200 + x196*x45), 0, x70*(-x3*x89 + x43*x90), -x3*x70*(x1*x86 + x93), -x148*(x112*x43 + x147*x3), x185*(x0*x159 + x184*x3), -x148*x3*(x0*x196 + x200), 0, (1/2)*x149*(x20*x207 - x208*x44 + x209 + x3*(x201 + x202*x4 + x205)), x185*(x0*(x20*x218 + x211*x3 + x213*x3 + x217) + x3*(-x202*x46 + x215)), x0*x220*(x20*x285 + x225*x43 + x240 - x253 - x3*(-x239 + x252 - x290*x3)), x317*(x0*(-x0*x250 - x20*x316 + x3*x307 - x309) - x3*(x296 + x3*x301 - x308)), x220*(x0*(x20*x325 + x3*x321 + x3*x322 + x324*x47) + x3*(x320*x45 + x323)), 0, x185*(x0*x327 - x3*x326), -x185*(x0*(-x212 - x214 + x329 + x330) + x328*x45), x220*(-x0*x332 + x3*x331), x317*(x0*x334 - x3*x333), -x220*(-x0*x336 + x335*x45), 0, -x185*(x0*x326 + x3*x327), -x185*x3*(x0*x328 + x215 - x329 - x330), x220*(x0*x331 + x3*x332), -x317*(x0*x333 + x3*x334), -x220*x3*(x0*x335 + x336),)

def hbar_cart(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = r**2
    x1 = B0*t
    x2 = X0*r
    x3 = 2*x2
    x4 = x1*x3
    x5 = B0*X0
    x6 = 2*x0
    x7 = x5*x6
    x8 = X0**2
    x9 = B0**2
    x10 = x8*x9
    x11 = t**2
    x12 = x10*x11
    x13 = r*x10
    x14 = t*x13
    x15 = x0*x10 + x0 + x12 - 2*x14 - x4 + x7
    x16 = r**3
    x17 = 16*x16
    x18 = x17*x5
    x19 = X1*r**4
    x20 = Jp0**2
    x21 = x20*x8
    x22 = r*x21
    x23 = Jp0**4
    x24 = X0**3
    x25 = 16*r
    x26 = x1*x8
    x27 = Jp1*x26
    x28 = B0*r
    x29 = x20*x24*x28
    x30 = X0*x9
    x31 = 48*x19
    x32 = Jp0*x8
    x33 = 8*x0
    x34 = B1*x33
    x35 = 48*x16
    x36 = B0**3
    x37 = x24*x36
    x38 = B0**4
    x39 = X0**4
    x40 = x38*x39
    x41 = t**3
    x42 = B0*Jp0*x24
    x43 = B1*x11
    x44 = x42*x43
    x45 = Jp1*t*x24*x9
    x46 = x36*x8
    x47 = r*x11
    x48 = 48*x47
    x49 = 16*x38
    x50 = X1*x24
    x51 = t**4*x50
    x52 = X1*x0
    x53 = x30*x52
    x54 = x11*x53
    x55 = x11*x52
    x56 = x24*x38
    x57 = x55*x56
    x58 = X1*r
    x59 = B0*x52
    x60 = X1*x11
    x61 = X0*x59 - X1*x4 - t*x58 + x2 - x26 + x28*x8 + x5*x60 + x52
    x62 = 8*x21
    x63 = B0*x61*x62
    x64 = 4*x0
    x65 = -8*x1*x2 + x10*x64 + 4*x12 - 8*x14 + x33*x5 + x64
    x66 = x21 + x65
    x67 = X0*X1*x20
    x68 = x66*x67
    x69 = -x21 + x65
    x70 = X0*x1
    x71 = B0*x3 - X1*t*x3*x9 + r - t*x10 - x1*x58 + x13 + x30*x60 + x53 + x59 - x70
    x72 = cos(th)
    x73 = sin(th)
    x74 = -x15
    x75 = Jp0*x74
    x76 = 8*x75
    x77 = -x69
    x78 = X1*x75
    x79 = -x71
    x80 = B1*x6
    x81 = 2*r*x72*(-2*Jp0**3*X1*x74*x8 + X0*x76*x79 + 4*X0*(4*B0*B1*X0*r*t*x15 + B0*Jp0*X0*r*x74 + 2*B1*r*t*x15 - B1*x15*x7 + Jp0*r*x74 - 2*x15*x43*x5 - x15*x80 - x70*x75) + x5*x61*x76 + x66*x78 + x77*x78)
    x82 = 4*x16
    x83 = 4*x19
    x84 = 4*r
    x85 = 12*x19
    x86 = 4*x15*(4*B0*B1*Jp0*r*t*x24 + 4*B0*Jp1*x0*x8 + 12*B0*X0*t*x0 + 4*B0*X1*t*x16 + B0*t*x20*x24 - B0*x83 + 2*B1*Jp0*r*t*x8 + 2*Jp1*X0*x0 + 2*Jp1*x0*x24*x9 + 2*Jp1*x11*x24*x9 + 24*X0*X1*t*x16*x9 + 16*X1*r*x24*x38*x41 + 12*X1*r*x36*x41*x8 + 16*X1*t*x16*x24*x38 + 36*X1*t*x16*x36*x8 - 12*r*x12 + 36*t*x0*x24*x36 + 12*t*x0*x38*x39 + 36*t*x0*x8*x9 - 24*x10*x16 - x17*x37 - x18 - x22 + 4*x24*x36*x41 - x27*x84 - x29 - x30*x85 - x32*x80 - 24*x37*x47 + 4*x38*x39*x41 - 4*x38*x51 - 12*x40*x47 - x40*x82 - x42*x80 - 2*x44 - x45*x84 - 36*x46*x55 - x46*x85 - 12*x54 - x56*x83 - 24*x57 - x82) - 2*x23*x50*x74 + x62*x74*x79 + x63*x74 + x67*x74*x77 + x68*x74
    x87 = (1/16)/x15**3
    return ((1/16)*(16*B0*B1*Jp0*r*t*x24 + 16*B0*Jp1*x0*x8 + 16*B0*X1*t*x16 + 4*B0*t*x20*x24 - 16*B0*x19 + 8*B1*Jp0*r*t*x8 + 8*Jp1*X0*x0 + 8*Jp1*x0*x24*x9 + 8*Jp1*x11*x24*x9 + 96*X0*X1*t*x16*x9 + X0*X1*x20*x69 + 64*X1*r*x24*x38*x41 + 48*X1*r*x36*x41*x8 + 64*X1*t*x16*x24*x38 + 144*X1*t*x16*x36*x8 + 2*X1*x23*x24 + 96*t*x0*x24*x36 + 48*t*x0*x38*x39 + 48*t*x0*x8*x9 - x10*x35 - x17*x40 - x18 - x19*x24*x49 + 8*x20*x71*x8 - 4*x22 - x25*x27 - x25*x45 - 4*x29 - x30*x31 - x31*x46 - x32*x34 - x34*x42 - x35*x37 - x37*x48 + 16*x38*x39*x41 - x40*x48 - 8*x44 - 144*x46*x55 - x49*x51 - 48*x54 - 96*x57 - x63 - x68)/x15**2, -x87*(-x73*x81 + x86*(x73**2 - 1))/x72, -x87*(-x73*x86 + x81),)

def dhbar_cart(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = r**2
    x1 = X0**2
    x2 = B0**2
    x3 = x1*x2
    x4 = x0*x3
    x5 = t**2
    x6 = x3*x5
    x7 = B0*X0
    x8 = x0*x7
    x9 = 2*x8
    x10 = r*t
    x11 = x10*x3
    x12 = 2*x11
    x13 = X0*r
    x14 = 2*x13
    x15 = B0*x14
    x16 = t*x15
    x17 = x0 - x16
    x18 = -x12 + x17 + x4 + x6 + x9
    x19 = x18**3
    x20 = X0*x2
    x21 = X1*x0
    x22 = X1*x10
    x23 = B0*x1
    x24 = r*x23
    x25 = t*x23
    x26 = B0*x21
    x27 = X0*x26
    x28 = x5*x7
    x29 = X1*x28
    x30 = X1*t
    x31 = x15*x30
    x32 = x13 + x21 - x22 + x24 - x25 + x27 + x29 - x31
    x33 = r**3
    x34 = 32*x33
    x35 = x32*x34
    x36 = -x20*x35
    x37 = B0*x18
    x38 = X1*x37
    x39 = x34*x38
    x40 = 4*x33
    x41 = 12*x33
    x42 = X0**3
    x43 = B0**3
    x44 = x42*x43
    x45 = t*x0
    x46 = 24*x44
    x47 = t*x4
    x48 = r*x5
    x49 = x44*x48
    x50 = Jp0**2
    x51 = x1*x50
    x52 = r*x51
    x53 = B0**4
    x54 = X0**4
    x55 = x53*x54
    x56 = t**3
    x57 = Jp1*X0
    x58 = 2*x0
    x59 = 4*B0
    x60 = r**4
    x61 = X1*x60
    x62 = x42*x50
    x63 = B0*x62
    x64 = r*x63
    x65 = t*x63
    x66 = 12*x55
    x67 = 4*x0
    x68 = Jp1*x23
    x69 = B0*x40
    x70 = x2*x42
    x71 = 2*x70
    x72 = Jp1*x5
    x73 = B1*Jp0
    x74 = x58*x73
    x75 = x42*x53
    x76 = 4*x75
    x77 = t**4
    x78 = X1*x77
    x79 = 12*x61
    x80 = x1*x43
    x81 = x30*x33
    x82 = 36*x80
    x83 = 24*x20
    x84 = X1*r
    x85 = x56*x75
    x86 = 16*x85
    x87 = 16*x33
    x88 = x30*x75
    x89 = 12*r
    x90 = X1*x56
    x91 = 2*B1
    x92 = x10*x91
    x93 = Jp0*x1
    x94 = B0*x42
    x95 = B0*x5
    x96 = x91*x95
    x97 = Jp0*x42
    x98 = 4*x10
    x99 = Jp1*x70
    x100 = x20*x21
    x101 = 12*x5
    x102 = x21*x5
    x103 = 24*x102
    x104 = x10*x73
    x105 = x42*x59
    x106 = -Jp1*x58*x70 + x1*x74 + x100*x101 + x102*x82 + x103*x75 - x104*x105 + x20*x79 - x30*x69 + x40*x55 - x45*x66 + x48*x66 + x52 - 4*x55*x56 - x57*x58 + x59*x61 + x61*x76 + x64 - x65 - x67*x68 + x68*x98 - x71*x72 + x74*x94 + x76*x78 + x79*x80 - x80*x89*x90 - x81*x82 - x81*x83 - x84*x86 - x87*x88 - x92*x93 + x96*x97 + x98*x99
    x107 = x106 + x3*x41 + x40*x7 + x41*x44 - x45*x46 - 12*x47 + 12*x49
    x108 = 4*r
    x109 = x108*x3
    x110 = x15*x32
    x111 = 2*r
    x112 = x32*x44
    x113 = t*x3
    x114 = 2*x32
    x115 = 2*t
    x116 = X0*x18
    x117 = x116*x30
    x118 = 2*B0
    x119 = 2*x21
    x120 = x119*x32
    x121 = X1*x5
    x122 = x13*x38
    x123 = x2*x30
    x124 = x123*x14
    x125 = 4*x22
    x126 = x125*x32
    x127 = x1*x18
    x128 = B0*x127
    x129 = X1**2
    x130 = x0*x18
    x131 = x129*x130
    x132 = B0*x131
    x133 = X2*x0
    x134 = x116*x133
    x135 = B0*x134
    x136 = x128 + x132 + x135
    x137 = r*x18
    x138 = X1*x137
    x139 = x18*x42
    x140 = x139*x2
    x141 = x127*x2
    x142 = X2*x5
    x143 = x129*x18
    x144 = x10*x143
    x145 = 5*x141
    x146 = x116*x58
    x147 = x129*x2
    x148 = 2*x116
    x149 = X2*t
    x150 = x149*x37
    x151 = 4*x18
    x152 = t*x13
    x153 = X2*x10
    x154 = -B0*x144 - x13*x150 + x133*x141 + x138 + x140 + x141*x142 - 2*x141*x153 - x145*x30 + x145*x84 + x146*x147 + x147*x148*x5 - x147*x151*x152
    x155 = -x100*x114 - x109*x32 - x110 - x111*x112 + x112*x115 + x113*x114 - x114*x121*x80 - x117*x118 - x120*x80 + 5*x122 + x124*x32 + x126*x80 + x136 + x154
    x156 = B0**5
    x157 = x32**2
    x158 = x111*x70
    x159 = t*x71
    x160 = x13*x18
    x161 = X1*x160
    x162 = X1*x6
    x163 = B0*x139
    x164 = 5*x128
    x165 = B0*x151
    x166 = 2*x128
    x167 = B0*x129*x146 + x128*x133 + x128*x142 + x129*x148*x95 - x129*x152*x165 + x131 + x134 - x144 - x149*x160 - x153*x166 + x163 - x164*x30 + x164*x84
    x168 = x110*x30 - x114*x162 - x114*x24 - x114*x27 - x120*x3 + x126*x3 - x158*x32 + x159*x32 + 3*x161 + x167
    x169 = 8*x50
    x170 = x169*x7
    x171 = x54*x56
    x172 = 32*x32
    x173 = x156*x172
    x174 = x0*x2
    x175 = x127*x174
    x176 = x139*x43
    x177 = 96*x0
    x178 = X0*x50
    x179 = X1*x178
    x180 = -x179
    x181 = x13*x59
    x182 = 4*X0
    x183 = x182*x2
    x184 = x123*x13
    x185 = x109 - 4*x113 + x121*x183 + x183*x21 - 8*x184 - x22*x59 + 4*x26
    x186 = x181 + x185
    x187 = x180 + x186
    x188 = x179 + x186
    x189 = X1*x50
    x190 = x148*x189
    x191 = 8*B0
    x192 = x191*x32
    x193 = Jp0**4
    x194 = x193*x42
    x195 = X1*x194
    x196 = x192*x195
    x197 = x127*x73
    x198 = 8*x32
    x199 = x2*x62
    x200 = 16*Jp1
    x201 = t*x7
    x202 = B0*x22
    x203 = r*x3
    x204 = x121*x20
    x205 = r + x100 - x113 - x124 + x15 - x201 - x202 + x203 + x204 + x26
    x206 = 16*x51
    x207 = B0*x32
    x208 = x205*x206*x207
    x209 = x112*x72
    x210 = Jp1*x4
    x211 = 96*x80
    x212 = x32*x45
    x213 = x156*x54
    x214 = X1*x33
    x215 = x116*x2
    x216 = x214*x215
    x217 = 192*x75
    x218 = X1*x127*x43
    x219 = x218*x33
    x220 = x13*x191
    x221 = t*x220
    x222 = 8*x11
    x223 = -x221 - x222 + x3*x67 + 4*x6 + x67 + 8*x8
    x224 = x223 + x51
    x225 = x223 - x51
    x226 = x225*x50
    x227 = x32*x7
    x228 = 4*x227
    x229 = X1*x228
    x230 = x1*x53
    x231 = x56*x84
    x232 = x231*x32
    x233 = x230*x232
    x234 = x156*x42
    x235 = 128*x234
    x236 = x32*x33
    x237 = x236*x30
    x238 = X0*x43
    x239 = x127*x43
    x240 = r*x121*x239
    x241 = x23*x32
    x242 = 16*x241
    x243 = x104*x70
    x244 = x224*x50
    x245 = x143*x244
    x246 = Jp1*x21
    x247 = 8*x18
    x248 = x127*x129
    x249 = 6*x193*x248
    x250 = X2*x139
    x251 = 2*x193*x250
    x252 = x163*x50
    x253 = X2*x60
    x254 = 16*x253
    x255 = 48*x60
    x256 = x143*x2
    x257 = 48*x130
    x258 = x18*x5
    x259 = 48*x55
    x260 = X2*x116
    x261 = x244*x260
    x262 = x139*x53
    x263 = 128*x262
    x264 = x18*x55
    x265 = 96*t
    x266 = x256*x33
    x267 = Jp1*x137
    x268 = 16*x70
    x269 = 8*x205
    x270 = x116*x269
    x271 = t*x140
    x272 = x250*x53*x77
    x273 = X2*x239
    x274 = x131*x2
    x275 = 48*x5
    x276 = x248*x53
    x277 = x276*x77
    x278 = 96*x43
    x279 = x116*x129
    x280 = x279*x60
    x281 = t*x21
    x282 = 288*x43
    x283 = t*x116
    x284 = x129*x283*x33
    x285 = r*x56
    x286 = 192*x276
    x287 = t*x33
    x288 = 144*x239
    x289 = x149*x33
    x290 = x215*x289
    x291 = x13*x143*x56
    x292 = X2*x137
    x293 = 48*x285
    x294 = 32*Jp1
    x295 = x116*x26
    x296 = x141*x246
    x297 = Jp1*x141
    x298 = x121*x297
    x299 = 16*x73
    x300 = t*x163
    x301 = x18*x51
    x302 = B0*x30
    x303 = x301*x302
    x304 = x116*x189
    x305 = x38*x52
    x306 = x134*x2
    x307 = x133*x5
    x308 = x262*x307
    x309 = x0*x5
    x310 = x279*x309
    x311 = x276*x309
    x312 = x138*x5
    x313 = x18*x30
    x314 = x128*x73
    x315 = 24*x314
    x316 = Jp1*x13
    x317 = 32*B0
    x318 = x22*x297
    x319 = x22*x314
    x320 = -96*x10*x264 + x116*x21*x299 + x121*x315 - x13*x299*x313 + x137*x299*x94 - x143*x226 - x150*x87 + x161*x169 - x189*x270 + x192*x304 + x2*x255*x260 + x200*x271 + x21*x315 + x214*x263 - x226*x260 + x245 - x246*x247 - x249 - x251 + 4*x252 + x254*x262 + x254*x37 + x255*x256 + x255*x273 + x255*x276 + x257*x55 + x258*x259 + x261 - 384*x262*x281 - 64*x262*x289 - x263*x90 - x265*x266 - x267*x268 + 16*x272 - x273*x293 + x274*x275 + x275*x306 + 48*x277 + x278*x280 - x278*x291 - x282*x284 + x282*x310 - x285*x286 - x286*x287 - x288*x289 + x288*x307 - 96*x290 - 64*x292*x85 - x294*x295 - 24*x296 - 24*x298 - x299*x300 - 12*x303 + 12*x305 + 96*x308 + 288*x311 + 384*x312*x75 + x313*x316*x317 + 48*x318 - 48*x319
    x321 = cos(th)
    x322 = x321**(-1.0)
    x323 = sin(th)
    x324 = -x18
    x325 = x13*x324
    x326 = x18**2
    x327 = B1*x326
    x328 = 8*x327
    x329 = x324**2
    x330 = Jp0*X1
    x331 = x18*x330
    x332 = x329*x331
    x333 = x108*x332
    x334 = x22*x324
    x335 = x328*x334
    x336 = Jp0*x329
    x337 = 4*x336
    x338 = x128*x337
    x339 = x21*x324
    x340 = x13*x336
    x341 = B1*t*x326
    x342 = x13*x341
    x343 = -x32
    x344 = B0*x343
    x345 = x220*x332
    x346 = 16*x327
    x347 = x343*x346
    x348 = x324*x326
    x349 = 16*B1
    x350 = x348*x349
    x351 = x25*x350
    x352 = x30*x324
    x353 = x13*x317*x327*x352
    x354 = Jp0**3
    x355 = x129*x354
    x356 = x116*x329
    x357 = 2*x354
    x358 = X0*x324
    x359 = x26*x358
    x360 = B0*x358
    x361 = 16*x336
    x362 = 4*x23
    x363 = X1*x329
    x364 = x198*x336
    x365 = 32*x327
    x366 = x192*x332
    x367 = X1*x324
    x368 = 4*x354
    x369 = -x225
    x370 = x329*x369
    x371 = x18*x370
    x372 = Jp0*X2
    x373 = x371*x372
    x374 = x224*x329
    x375 = x18*x374
    x376 = x372*x375
    x377 = B0*x114
    x378 = x330*x377
    x379 = -x205
    x380 = 8*x379
    x381 = x332*x380
    x382 = -x188*x329
    x383 = 2*x18
    x384 = x330*x383
    x385 = x329*x384
    x386 = x227*x361*x379
    x387 = x324*x383
    x388 = x330*x387
    x389 = x369*x388
    x390 = B1*x116
    x391 = B0*x390
    x392 = t*x358
    x393 = B0*Jp0
    x394 = -4*B0*B1*X0*r*t*x18 - B0*Jp0*X0*r*x324 - 2*B1*r*t*x18 - Jp0*r*x324 + x116*x96 + x130*x91 + x391*x58 + x392*x393
    x395 = -x394
    x396 = x191*x343
    x397 = r*x324
    x398 = X1*x397
    x399 = 2*x343
    x400 = x133*x324
    x401 = x129*x324
    x402 = B0*x0
    x403 = x401*x5
    x404 = X1*x325
    x405 = 2*x325
    x406 = -B0*x149*x405 + B0*x403 - x10*x118*x401 + x133*x360 + x142*x360 - x153*x324 + x23*x324 - x30*x358*x59 + x400 + x401*x402 + x404*x59
    x407 = -x100*x399 + x113*x399 + 4*x184*x343 + x202*x399 - x203*x399 - x204*x399 - x26*x399 + x406
    x408 = Jp0*x358
    x409 = x18*x191*x408
    x410 = -x352 + x358 + 3*x398
    x411 = x111*x321
    x412 = x411*(X2*x127*x329*x357 + x11*x343*x365 - x113*x364 + x116*x395*x396 + x117*x191*x336 + x121*x346*x360 - x128*x343*x367*x368 + x157*x20*x361 + x187*x385 + x192*x340 + x203*x364 + x224*x344*x388 + x24*x350 - x32*x354*x362*x363 + x325*x328 + x328*x339 - x333 - x335 - x338 + 16*x342*x344 + x344*x389 - x345 + x346*x359 - x347*x4 - x347*x6 - x347*x8 - x351 - x353 + 4*x355*x356 - x366 + x370*x378 - x373 + x374*x378 - x376 - x381 + x382*x384 + x386 + x409*(2*B0*X0*r*x343 - 2*x398 - x407) + x409*(-x111*x343 - x181*x343 + x201*x399 + x407 + x410))
    x413 = x323**2 - 1
    x414 = x251*x329
    x415 = x249*x329
    x416 = x189*x356
    x417 = x192*x416
    x418 = x370*x50
    x419 = x260*x418
    x420 = x261*x329
    x421 = x143*x418
    x422 = x245*x329
    x423 = X1*x169*x356*x379
    x424 = x206*x329
    x425 = x207*x379*x424
    x426 = 24*x3
    x427 = x46*x48
    x428 = -12*B0*X0*t*x0 - 36*t*x0*x1*x2 - 36*t*x0*x42*x43 + x106 + x33*x426 + x40 - 4*x42*x43*x56 + x427 + x44*x87 + x6*x89 + x7*x87
    x429 = -x428
    x430 = x326*x429
    x431 = x170*x329
    x432 = 8*x178
    x433 = 48*x236
    x434 = 8*x236
    x435 = x156*x198
    x436 = x32*x48
    x437 = 48*x75
    x438 = x32*x61
    x439 = 24*x43
    x440 = 24*x436
    x441 = x42*x435
    x442 = Jp1*x108
    x443 = Jp1*x67
    x444 = 72*x212
    x445 = x102*x32
    x446 = 72*x230
    x447 = Jp1*x32
    x448 = 8*Jp1
    x449 = B1*x67
    x450 = Jp0*x449
    x451 = 4*B1
    x452 = Jp0*x451
    x453 = x10*x451
    x454 = x116*x402
    x455 = x176*x5
    x456 = x33*x38
    x457 = x0*x176
    x458 = x10*x176
    x459 = 24*x10
    x460 = x18*x26
    x461 = x239*x281
    x462 = x2*x21*x283
    x463 = x121*x160
    x464 = x2*x463
    x465 = 12*x60
    x466 = 12*x130
    x467 = 4*Jp1
    x468 = 12*x253
    x469 = 72*x43
    x470 = 36*x239
    x471 = Jp0*x116
    x472 = x30*x73
    x473 = 6*x314
    x474 = Jp1*x313
    x475 = X1*x262*x34 - 24*t*x266 + x101*x274 + x101*x306 + x108*x163*x73 + x121*x473 - x13*x151*x472 + x14*x18*x189 - x140*x442 - x149*x18*x69 - x149*x262*x87 + x165*x253 - x21*x262*x265 + x21*x451*x471 + x21*x473 + x215*x468 + x220*x474 + x239*x468 - x246*x383 + x252 + 4*x253*x262 + x256*x465 + x258*x66 - 32*x262*x90 - x264*x459 + x271*x467 + 4*x272 - x273*x56*x89 - 48*x276*x287 - x276*x293 + x276*x465 + 12*x277 + x280*x439 - x284*x469 - x289*x470 - 24*x290 - x291*x439 - x292*x86 - x295*x448 - 6*x296 - 6*x298 - x300*x452 - 3*x303 + 3*x305 + x307*x470 + 24*x308 + x310*x469 + 72*x311 + 96*x312*x75 + 12*x318 - 12*x319 + x466*x55
    x476 = -12*t*x460 - x141*x459 + 36*x175 + 72*x216 - 12*x218*x56 + 84*x219 + 108*x240 + 12*x454 + 12*x455 + 20*x456 + 36*x457 - 48*x458 - 180*x461 - 96*x462 + 24*x464 + x475
    x477 = x151*x324
    x478 = x155*x329*x432 + x157*x2*x206*x329 - x168*x431 + x187*x190*x329 + x190*x382 - x196*x329 + x228*x244*x363 + x229*x418 + x396*x430 + x414 + x415 - x417 - x419 - x420 - x421 - x422 - x423 + x425 + x477*(Jp0*x241*x453 - X0*x438*x439 + t*x114*x199 - x10*x112*x448 - x103*x238*x32 + x111*x197 - x111*x199*x32 + x112*x443 + x123*x434 - x128*x442 + x171*x435 + x173*x231*x42 - x192*x33 - x198*x2*x61 + x198*x210 + x198*x243 + x198*x85 + 4*x209 + 24*x212*x213 + x212*x83 - x213*x434 - x213*x440 - x222*x447 + x227*x443 - 24*x230*x438 + 24*x233 + x234*x30*x35 - 48*x234*x445 + x237*x446 + x238*x30*x433 - x241*x450 - x32*x450*x70 - x32*x452*x5*x70 - x35*x75 + x36 - x377*x52 - x433*x80 - x436*x437 - x440*x80 - x441*x61 - x441*x78 + x444*x75 + x444*x80 - x445*x446 + x476)
    x479 = (1/16)/x18**5
    x480 = -r*t + x17 + x28 + x8
    x481 = -x480
    x482 = B1*x33
    x483 = x481*x482
    x484 = 8*x483
    x485 = x128*x482
    x486 = x483*x70
    x487 = x439*x54
    x488 = x140*x482
    x489 = B1*x481
    x490 = x48*x489
    x491 = B1*x137*x5*x70
    x492 = B1*x61
    x493 = B1*x62
    x494 = X0**5
    x495 = x111*x481
    x496 = B2*x58
    x497 = Jp0*x127
    x498 = B1**2
    x499 = x498*x58
    x500 = Jp0*x139
    x501 = 2*x5
    x502 = x498*x67
    x503 = x481*x502
    x504 = x494*x53
    x505 = B1*x43
    x506 = B1*x54
    x507 = Jp0*x163
    x508 = x393*x42
    x509 = Jp1*x127
    x510 = x498*x5
    x511 = x481*x54
    x512 = x481*x492
    x513 = 8*x512
    x514 = Jp1*x481
    x515 = x102*x489
    x516 = 96*x455
    x517 = B1*x21
    x518 = x141*x5
    x519 = -2*B0*B1*Jp1*x0*x18*x42 - 8*B0*B1*Jp1*x0*x42*x481 - 2*B0*B1*Jp1*x18*x42*x5 - 48*B0*B1*X0*X1*t*x18*x33 - 8*B0*B1*X0*X1*t*x33*x481 - 2*B0*B1*t*x481*x50*x54 - 4*B0*B2*Jp0*r*t*x18*x42 - 2*B0*Jp0*Jp1*t*x18*x42 - 8*B0*Jp0*r*t*x481*x498*x54 - 4*B0*Jp2*x0*x1*x18 + B0*x495*x50*x506 - 2*B1*Jp1*x0*x1*x18 - 4*B1*Jp1*x0*x1*x481 - 4*B1*Jp1*x0*x2*x481*x54 - 4*B1*Jp1*x2*x481*x5*x54 - 36*B1*X1*r*x1*x18*x2*x56 - 64*B1*X1*r*x18*x42*x43*x56 - 24*B1*X1*r*x42*x43*x481*x56 - 32*B1*X1*r*x481*x53*x54*x56 - 108*B1*X1*t*x1*x18*x2*x33 - 48*B1*X1*t*x1*x2*x33*x481 - 64*B1*X1*t*x18*x33*x42*x43 - 4*B1*X1*t*x18*x33 - 72*B1*X1*t*x33*x42*x43*x481 - 32*B1*X1*t*x33*x481*x53*x54 - 48*B1*t*x0*x18*x43*x54 - 24*B1*t*x0*x481*x494*x53 - B1*t*x18*x42*x50 + B1*x10*x191*x42*x514 - 16*B1*x18*x43*x54*x56 - 8*B1*x481*x494*x53*x56 - 2*B2*Jp0*r*t*x1*x18 + B2*x501*x507 - 4*Jp0*r*t*x18*x42*x498 - 4*Jp0*r*t*x42*x481*x498 + Jp0*x510*x511*x59 + Jp1*x111*x497 + Jp1*x163*x453 - 2*Jp2*X0*x0*x18 - 2*Jp2*x0*x18*x2*x42 + Jp2*x128*x98 + Jp2*x140*x98 - 2*Jp2*x18*x2*x42*x5 + 8*x10*x2*x506*x514 + x137*x275*x505*x54 + x137*x493 + 36*x141*x492 + x151*x492 + x176*x349*x78 + 16*x176*x492 + x18*x505*x54*x87 + 24*x21*x489*x6 + x259*x515 + 24*x26*x390*x5 + 2*x267*x508 + 24*x391*x61 + x393*x503*x54 + x426*x512 + 72*x44*x515 + x46*x512 + 24*x48*x489*x504 + x484*x504 + 8*x489*x55*x78 + x493*x495 + x496*x497 + x496*x507 + x498*x500*x501 + x499*x500 + x503*x97 + x509*x92 + x513*x55 + x513*x7 + x516*x517 + 108*x517*x518
    x520 = -x107
    x521 = x182*x326
    x522 = B1*x480
    x523 = Jp0*x91
    x524 = x481*x523
    x525 = x18*x73
    x526 = Jp1*x18
    x527 = t*x128
    x528 = x481*x73
    x529 = x116*x393
    x530 = x481*x91
    x531 = -Jp0*t*x481*x70*x91 + Jp1*x121*x215 + Jp1*x460 + r*x297 - t*x297 + x111*x314 + x121*x529*x91 - x13*x165*x472 - x14*x2*x474 + x158*x528 - x202*x526 + x21*x3*x524 + x21*x525 + x215*x246 - x22*x3*x452*x481 - x22*x525 + x26*x471*x91 + x27*x524 - x31*x528 + x330*x530*x6 - x523*x527
    x532 = x1*x337
    x533 = x108*x23
    x534 = -B1*x221 + x28*x451 + x449*x7 + x449 - x453
    x535 = Jp0*Jp1*X0 - x534
    x536 = x301*x363
    x537 = Jp0*x57 + x534
    x538 = Jp1*X1
    x539 = x329*x380
    x540 = x330*x370
    x541 = Jp1*x116
    x542 = x330*x374
    x543 = X1*x51*x530
    x544 = -x139*x329*x368*x538 - x193*x363*x451*x511 + x198*x329*x489*x63 + x337*x379*x509 + x338*x447 + x370*x543 + x374*x543 + x481*x493*x539 + x532*(x160*x73 + x24*x524 + x316*x37 + x531) + x532*(2*B0*B1*Jp0*t*x1*x481 + B0*Jp1*X0*t*x18 + B1*Jp0*X0*t*x18 - x14*x525 - x14*x528 - x15*x526 - x267 - x528*x533 - x531) + x535*x536 + x536*x537 + x540*x541 + x541*x542
    x545 = x387*(24*B0*B1*t*x0*x1*x18 + 72*B1*t*x0*x18*x2*x42 + 24*B1*t*x0*x2*x42*x481 + 48*B1*t*x0*x43*x481*x54 - x23*x484 - x390*x40 - x483*x487 - 24*x485 - 24*x486 - x487*x490 - 36*x488 - 36*x491 - x519) + x520*x521*x522 + x544
    x546 = 2*x323
    x547 = x33*x379
    x548 = 8*x547
    x549 = 2*x379
    x550 = x379*x61
    x551 = x111*x379
    x552 = x379*x449
    x553 = x75*x78
    x554 = 24*x379
    x555 = x10*x380
    x556 = x100*x5
    x557 = x102*x379
    x558 = x102*x80
    x559 = -8*B0*B1*Jp0*r*t*x379*x42 - 8*B0*Jp1*r*x1*x18 - 8*B0*Jp1*x0*x1*x379 - 8*B0*X1*t*x33*x379 - 2*B0*t*x379*x42*x50 - 4*B1*Jp0*r*t*x1*x379 - 2*B1*Jp0*t*x1*x18 - 4*Jp1*X0*r*x18 - 4*Jp1*X0*x0*x379 - 4*Jp1*x0*x2*x379*x42 - 4*Jp1*x2*x379*x42*x5 - 48*X0*X1*t*x2*x33*x379 - 24*X1*r*x1*x379*x43*x56 - 32*X1*r*x379*x42*x53*x56 - 72*X1*t*x1*x33*x379*x43 - 32*X1*t*x33*x379*x42*x53 - 24*t*x0*x379*x53*x54 + x105*x379*x5*x73 + x108*x197 + x191*x550 + x301 - 8*x379*x53*x54*x56 + 72*x379*x558 + x380*x553 + x437*x557 + x467*x527 + x48*x55*x554 + x508*x552 + x52*x549 + x548*x55 + 8*x550*x75 + 24*x550*x80 + x550*x83 + x551*x63 + x552*x93 + x554*x556 + x555*x68 + x555*x99
    x560 = x269*x326
    x561 = x14*x379
    x562 = x119*x379
    x563 = -2*B0*X0*X1*r*t*x379 - 3*B0*X0*X1*t*x18 - 2*B0*t*x1*x379 - 4*X1*r*t*x1*x2*x379 - 2*t*x2*x379*x42 + x116 + 6*x122 + x132 + x135 + x154 + x162*x549 + x166 + x27*x549 + x3*x562 + x379*x533 + x551*x70 + x561
    x564 = x379**2
    x565 = x115*x94
    x566 = x121*x23
    x567 = x22*x362
    x568 = X1*x13
    x569 = -x117 + x127 + x151*x568 + x167
    x570 = x108 + x185 - 4*x201 + x220
    x571 = x180 + x570
    x572 = -x571
    x573 = x179 + x570
    x574 = 2*x573
    x575 = 4*x179*x379
    x576 = x190*x329*x572 - x195*x539 - x329*x432*x563 + x370*x575 + x374*x575 - x414 - x415 + x416*x574 + x417 + x419 + x420 + x421 + x422 + x423 + x424*x564 + x425 + x431*(X0*x562 + x1*x551 + x23*x562 - x30*x561 - x379*x565 - x379*x567 + x549*x566 + x551*x94 + x569)
    x577 = r*(x477*(24*t*x0*x1*x2*x379 + 48*t*x0*x379*x42*x43 - x379*x427 - x426*x547 - x46*x547 - x476 - x548*x7 - x559) + x520*x560 + x576)
    x578 = r**(-1.0)
    x579 = x479*x578
    x580 = x321**2
    x581 = x321**3
    x582 = x324*x330
    x583 = -2*X1*x1*x324*x354 + x182*x395 + x192*x408 + x224*x582 + x369*x582 + x380*x408
    x584 = -x583
    x585 = 2*x580
    x586 = x413 + x585
    x587 = x324*x51
    x588 = X1*x358
    x589 = -2*X1*x193*x324*x42 + x151*x429 + x192*x587 + x244*x588 + x369*x50*x588 + x380*x587
    x590 = x18*x323
    x591 = x329*x528
    x592 = x148*x329*x330
    x593 = X0*x530
    x594 = Jp1*x356
    x595 = x1*x379
    x596 = 16*x595
    x597 = x358*x480*x91
    x598 = x224*x331
    x599 = 2*x480
    x600 = 2*x324
    x601 = 2*x360
    x602 = x3*x480
    x603 = x119*x602 + x121*x601 - x125*x602 + x158*x480 - x159*x480 + x162*x599 - x181*x352 + x24*x600 - x25*x600 + x27*x599 - x31*x480 - x334 + x339 + 2*x359
    x604 = x247*x358*x73
    x605 = x326*x480
    x606 = x502*x605
    x607 = x326*x358
    x608 = -4*B1*X1*x18*x324*x354*x42*x480 - 4*B1*X1*x329*x354*x42*x481 + 8*B1*x127*x395*x480 - 6*Jp1*X1*x1*x18*x329*x50 + x182*(2*B0*B1*Jp0*r*x1*x329*x481 + 4*B0*B2*X0*r*t*x324*x326 + B0*Jp1*X0*r*x18*x329 - B0*Jp1*x283*x329 + 8*B0*r*t*x1*x326*x480*x498 + B1*Jp0*X0*r*x18*x329 + 2*B1*Jp0*X0*r*x329*x481 + 2*B2*r*t*x324*x326 - B2*x326*x5*x601 + Jp1*r*x18*x329 + 4*X0*r*t*x324*x326*x498 + 4*X0*r*t*x326*x480*x498 - X0*x606 - x23*x606 - x25*x336*x530 - x283*x329*x73 - x326*x360*x496 - x348*x496 - x362*x510*x605 - x498*x501*x607 - x499*x607) + x192*x594 + x242*x591 + x331*x369*x597 + x371*x538 + x375*x538 + x380*x594 + x535*x592 + x537*x592 + x540*x593 + x542*x593 + x591*x596 + x597*x598 + x604*(x24*x599 + x325 + x603) + x604*(2*B0*t*x1*x480 + X0*t*x324 - x14*x480 - x405 - x480*x533 - x603)
    x609 = x137*x323*x585
    x610 = 8*X0
    x611 = x481*x505*x54
    x612 = B1*x128
    x613 = x182*x430*x522 + x387*(72*B0*B1*t*x0*x1*x18 + 24*B0*B1*t*x0*x1*x481 + 12*B1*X0*t*x0*x18 + 108*B1*t*x0*x18*x2*x42 + 72*B1*t*x0*x2*x42*x481 + 72*B1*t*x0*x43*x481*x54 + 12*B1*x18*x2*x42*x56 + 8*B1*x43*x481*x54*x56 - x23*x34*x489 - x34*x611 - x390*x87 - 48*x48*x611 - 24*x48*x612 - x483*x610 - 48*x485 - 48*x486 - 48*x488 - 24*x490*x70 - 72*x491 - x519) + x544
    x614 = -x324*x413
    x615 = 2*x321
    x616 = x321*x326
    x617 = 16*x205
    x618 = x330*x549
    x619 = x205*x224
    x620 = x14*x205
    x621 = x119*x205
    x622 = 2*x205
    x623 = x25*x622
    x624 = x22*x622
    x625 = x181*x205
    x626 = x30*x625
    x627 = x2*x358
    x628 = x111*x205
    x629 = -2*B0*X0*t*x205 - 2*B0*X1*r*t*x205 - 2*B0*X1*t*x324 - B0*X2*r*t*x324 + B0*x108*x367 + B0*x400 - 4*X0*X1*r*t*x2*x205 - 4*X0*X1*t*x2*x324 - 2*X0*X2*r*t*x2*x324 - 2*r*t*x129*x2*x324 - 2*t*x1*x2*x205 - x0 + x100*x622 + x12 + x133*x627 + x142*x627 + x16 + x174*x401 + x2*x403 + 4*x2*x404 + x203*x622 + x204*x622 + x26*x622 + x3*x324 - x4 - x6 + x601 + x625 + x628 - x9
    x630 = 32*x547
    x631 = x3*x547
    x632 = r*x6
    x633 = r*(x137*x321*x546*(16*B0*B1*X0*X1*x0*x324*x326 + 16*B0*B1*X0*X1*x324*x326*x5 + 16*B0*B1*r*x1*x324*x326 + 16*B0*B1*x0*x1*x205*x326 + 16*B0*B1*x1*x205*x326*x5 + 8*B0*Jp0*X0*X1*t*x18*x329 + 8*B0*Jp0*t*x1*x329*x379 + 16*B1*X0*r*x324*x326 + 16*B1*X0*x0*x205*x326 + 8*B1*X1*x0*x324*x326 + 4*X0*x129*x18*x329*x354 - X0*x361*x564 + 4*X1*x1*x18*x205*x324*x354 + 4*X1*x1*x329*x354*x379 + 2*X2*x1*x18*x329*x354 - x10*x205*x23*x365 - x116*x337 - x205*x389 - x24*x336*x380 + x247*x408*x629 - x270*x395 - x328*x392 - x333 - x335 - x338 - x340*x380 - x342*x617 - x345 - x351 - x353 - x366 - x370*x618 - x373 - x374*x618 - x376 - x381 - x385*x572 - x385*x573 - x386 - x388*x619 - x409*(x24*x622 + x27*x622 + x29*x622 + x406 + x410 + x620 + x621 - x623 - x624 - x626)) + x324*x546*x584*x616 - x614*(-x429*x560 - x477*(24*B0*X0*r*t*x18 + 24*B0*X0*t*x0*x379 + 24*B0*X1*t*x0*x18 + 144*X0*X1*t*x0*x18*x2 + 216*X1*t*x0*x1*x18*x43 + 24*X1*x1*x18*x43*x56 + 72*r*t*x1*x18*x2 + 72*r*t*x18*x42*x43 + 72*t*x0*x1*x2*x379 + 72*t*x0*x379*x42*x43 - 72*x175 - 96*x216 - 96*x219 - 144*x240 + 8*x379*x42*x43*x56 - 48*x379*x49 - x39 - x44*x630 - 48*x454 - 24*x455 - 48*x457 - 48*x464 - x466 - x475 - 12*x518 - x548 - x554*x632 - x559 - x630*x7 - 48*x631) - x576))
    x634 = (1/16)*x578/x18**6
    x635 = x111*x583
    x636 = x323*x326*x635 + x411*x608 - x546*x613 + x589*x616
    x637 = x18*x615
    x638 = x326*x330
    x639 = Jp0*x269
    x640 = x205**2
    x641 = 16*x0
    x642 = x205*x641
    x643 = r*x128
    x644 = 2*x571
    x645 = 32*x379
    x646 = 32*x550
    x647 = 128*x547
    x648 = 288*x379
    x649 = 96*x379
    x650 = x55*x649
    x651 = 4*x179
    x652 = x30*x547
    x653 = x299*x379*x42
    x654 = x10*x645
    x655 = x137*(-x411*(16*B0*B1*X0*X1*x0*x326 + 16*B0*B1*X0*X1*x326*x5 + 32*B0*B1*r*t*x1*x18*x205 + 16*B0*B1*r*x1*x326 + 8*B0*Jp0*X0*X1*r*x326 + 8*B0*Jp0*X1*x32*x326 + 8*B0*Jp0*t*x1*x18*x205 + 4*B0*Jp0*x1*x326 + 16*B1*X0*r*t*x18*x205 + 16*B1*X0*r*x326 + 8*B1*X1*x0*x326 + 8*Jp0*X0*x18*x629 + 16*Jp0*X0*x18*x640 + 4*Jp0*X0*x326 + 4*Jp0*X1*r*x326 + 4*Jp0*X1*x18*x205*x225 + 2*Jp0*X1*x326*x573 + Jp0*X2*x224*x326 - Jp0*X2*x225*x326 - X0*x269*x394 + 8*X1*x1*x18*x205*x354 - X2*x1*x326*x357 - x128*x205*x349*x5 - x13*x302*x365 - x151*x330*x619 - x160*x639 - x191*x471*(4*B0*X0*X1*t*x18 + 2*B0*X0*X1*x0*x205 + 2*B0*X0*X1*x205*x5 + 2*B0*X0*X2*r*t*x18 + 2*B0*r*t*x129*x18 + 2*B0*r*x1*x205 + 2*X0*r*x205 + X1*t*x18 + 2*X1*x0*x205 + X2*r*t*x18 - X2*x130 - x116 - x136 - 3*x138 - x143*x95 - x165*x568 - x260*x95 - x623 - x624 - x626) - 8*x201*x638 - x22*x328 - x25*x346 - x32*x529*x617 - x330*x560 - x341*x610 - x355*x521 - x390*x642 - x612*x642 - x638*x644 - x639*x643) + x590*(B0*x646 + X1*x194*x269 + 16*r*x197 - 8*t*x197 - x0*x645*x68 - 288*x10*x141 - x104*x596 - x104*x645*x94 - x13*x265*x37 - x160*x200 + x170*(-X0*x621 - x1*x628 + x205*x565 + x205*x567 - x23*x621 + x30*x620 - x566*x622 + x569 - x628*x94) - x174*x200*x379*x42 + 288*x175 - x177*x201*x379 + 192*x2*x463 + 96*x20*x550 - 192*x20*x652 + x200*x527 + x205*x225*x651 + x206*x640 - x208 - x211*x231*x379 + x211*x550 + 384*x216 + x217*x557 - 96*x218*x56 + 384*x219 + 576*x240 + x257 - x265*x460 - x268*x379*x72 - x269*x428 - x294*x643 + 4*x301 - x302*x630 + x304*x574 - x304*x644 + x320 + 192*x379*x49 - x379*x57*x641 - 128*x379*x84*x85 + x380*x52 + x380*x64 - x380*x65 + x402*x653 - x432*x563 - x44*x45*x648 - x44*x56*x645 + x44*x647 - x45*x650 + 192*x454 + 128*x456 + 192*x457 - 288*x458 - 864*x461 - 576*x462 - x47*x648 + x48*x650 + x516 + 48*x518 - x55*x56*x645 + x55*x630 + x553*x645 + x556*x649 + x558*x648 + x595*x641*x73 - x619*x651 + x630 + 192*x631 + x632*x649 + x646*x75 + x647*x7 - x647*x88 - 288*x652*x80 + x653*x95 + x654*x68 + x654*x99) + x637*(8*Jp0*X0*x18*x205 + Jp0*X1*x18*x225 + 2*X1*x1*x18*x354 - x182*x394 - x192*x471 - x598))
    return (-1/16*(16*B0*B1*Jp0*x0*x1*x32 + 16*B0*Jp1*r*x1*x18 + 4*B0*X0*X1*x224*x32*x50 + 8*B0*r*x1*x32*x50 + 8*B0*x107*x32 + 16*B1*Jp0*x0*x2*x32*x42 + 16*B1*Jp0*x2*x32*x42*x5 + 32*Jp1*r*t*x1*x2*x32 + 32*Jp1*r*t*x32*x42*x43 + 192*X0*X1*t*x0*x18*x2 + 96*X0*X1*x0*x32*x43*x5 + 2*X0*X1*x18*x187*x50 + 96*X0*X1*x32*x43*x60 + 8*X0*x155*x50 + 576*X1*t*x0*x1*x18*x43 + 288*X1*x0*x1*x32*x5*x53 + 192*X1*x0*x156*x32*x42*x5 + 96*X1*x1*x32*x53*x60 + 32*X1*x156*x32*x42*x60 + 32*X1*x156*x32*x42*x77 + 32*X1*x2*x32*x60 + 96*r*t*x18*x42*x43 + 96*r*x156*x32*x5*x54 - 8*r*x197 + 8*r*x2*x32*x42*x50 + 96*r*x32*x42*x5*x53 - t*x198*x199 - x0*x112*x200 + 16*x1*x157*x2*x50 + 96*x1*x32*x33*x43 - x104*x242 - x123*x35 + 32*x156*x32*x33*x54 - x168*x170 - x171*x173 - x172*x210 - x172*x243 - 48*x175 - x176*x177 - x188*x190 - x196 - x200*x32*x8 - x208 - 16*x209 - x211*x212 - 96*x212*x213 - x212*x217 - 192*x216 - 288*x219 - x226*x229 - 288*x230*x237 - x232*x235 - 96*x233 - x235*x237 - 192*x237*x238 - 288*x240 + 96*x32*x33*x42*x53 - x320 - x36 - x39)/x19, x322*x479*(-x323*x412 + x413*x478), x479*(-x323*x478 + x412), -x579*(x321*x577 - x545*x546), x634*(-x323*(2*x326*x397*x581*x584 - x329*x586*x589*x590 - x608*x609 + x613*x614*x615) + x580*x633)/x580, -x579*(x321*x655 + x323*x636), -x579*(x323*x577 + x545*x615), x322*x634*(-x19*x323*x586*x589 + x19*x581*x635 + x323*x633 + x413*x613*x637 - x608*x609), -x579*(-x321*x636 + x323*x655),)

def ricci_cart(t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3):
    x0 = r**2
    x1 = B0**2
    x2 = X0**2
    x3 = x1*x2
    x4 = x0*x3
    x5 = t**2
    x6 = x3*x5
    x7 = B0*X0
    x8 = x0*x7
    x9 = 2*x8
    x10 = r*t
    x11 = 2*x10
    x12 = X0*r
    x13 = B0*x12
    x14 = 2*x13
    x15 = t*x14
    x16 = x0 - x15
    x17 = -x11*x3 + x16 + x4 + x6 + x9
    x18 = x17**2
    x19 = X1*x18
    x20 = 2*Jp1
    x21 = x19*x20
    x22 = 8*r
    x23 = B0*x19
    x24 = 4*x18
    x25 = B0*X2
    x26 = x10*x25
    x27 = x0*x24
    x28 = 16*x12
    x29 = x1*x28
    x30 = x19*x29
    x31 = X0*x1
    x32 = 16*t
    x33 = x31*x32
    x34 = x19*x33
    x35 = 8*t
    x36 = x1*x12
    x37 = X2*x36
    x38 = x35*x37
    x39 = X2*x31
    x40 = x31*x5
    x41 = X2*x40
    x42 = X1**2*x1
    x43 = x10*x42
    x44 = 8*x43
    x45 = x42*x5
    x46 = 4*x17
    x47 = Jp0*X1
    x48 = X0*x47
    x49 = x5*x7
    x50 = -x10 + x16 + x49 + x8
    x51 = B1*x50
    x52 = x48*x51
    x53 = X1*x0
    x54 = X1*x10
    x55 = B0*x2
    x56 = r*x55
    x57 = t*x55
    x58 = x53*x7
    x59 = -X1*x15 + X1*x49 + x12 + x53 - x54 + x56 - x57 + x58
    x60 = x59**2
    x61 = x1*x60
    x62 = x1*x59
    x63 = 8*x62
    x64 = x17*x63
    x65 = x53*x63
    x66 = B0**3
    x67 = x2*x66
    x68 = x59*x67
    x69 = x22*x68
    x70 = x35*x68
    x71 = X1*x17
    x72 = x59*x66
    x73 = x28*x72
    x74 = 8*x53
    x75 = X0*x72
    x76 = x74*x75
    x77 = 8*x5
    x78 = x75*x77
    x79 = B1*x11
    x80 = 2*x0
    x81 = B1*x80
    x82 = B1*t
    x83 = x13*x46
    x84 = -x17
    x85 = Jp0*r
    x86 = x84*x85
    x87 = B1*x9
    x88 = 2*x17
    x89 = B1*x49
    x90 = t*x7
    x91 = Jp0*x90
    x92 = Jp0*x13
    x93 = -x17*x79 + x17*x81 + x17*x87 - x82*x83 + x84*x91 - x84*x92 - x86 + x88*x89
    x94 = x46*x7
    x95 = B0*x59
    x96 = 12*r
    x97 = B0*x71
    x98 = X1*t
    x99 = B0*x98
    x100 = x0*x46
    x101 = 4*B0
    x102 = x101*x82
    x103 = x31*x59
    x104 = B0*x53
    x105 = B0*x54
    x106 = r*x3
    x107 = t*x3
    x108 = x31*x53
    x109 = X1*x40 + r + x104 - x105 + x106 - x107 + x108 + x14 - 2*x36*x98 - x90
    x110 = x109*x59
    x111 = -2*X1*x78 + 2*x100*x25 + 2*x100*x39 + 2*x100*x42 + 2*x101*x110 + 2*x103*x35 - 2*x17*x38 - 2*x17*x44 - 2*x20*x71 - 2*x22*x95 - 2*x26*x46 - 2*x28*x62 + 2*x29*x71 + 2*x3*x46 - 2*x33*x71 + 2*x41*x46 + 2*x45*x46 - 2*x46*x99 - 2*x48*(-x102*x12 - x79 + x81 + x85 + x87 + 2*x89 - x91 + x92) + 8*x52 + 2*x54*x63 - 2*x65 - 2*x69 + 2*x70 + 2*x73*x98 - 2*x76 + 2*x94 + 2*x96*x97
    x112 = cos(th)
    x113 = r*x112
    x114 = sin(th)
    x115 = 16*B1
    x116 = x115*x50
    x117 = x116*x58
    x118 = 16*r
    x119 = X0**3
    x120 = x1*x119
    x121 = x120*x51
    x122 = x118*x121
    x123 = x121*x32
    x124 = x3*x54
    x125 = x116*x3*x53
    x126 = x116*x6
    x127 = Jp0*x55
    x128 = x127*x46
    x129 = x47*x83
    x130 = x46*x47*x90
    x131 = B1*x59
    x132 = x13*x32
    x133 = x59*x8
    x134 = Jp0*X0
    x135 = 8*x85
    x136 = x3*x59
    x137 = x119*x66
    x138 = x137*x59
    x139 = x135*x138
    x140 = Jp0*x35
    x141 = x138*x140
    x142 = t*x12*x47*x63
    x143 = B1*x10
    x144 = 32*x143
    x145 = 8*Jp0
    x146 = x145*x59
    x147 = x108*x146
    x148 = x115*x59
    x149 = Jp0*x2
    x150 = x149*x72
    x151 = 16*x54
    x152 = x150*x151
    x153 = x150*x74
    x154 = x47*x68*x77
    x155 = x109*x135
    x156 = x13*x35*x47
    x157 = x120*x140
    x158 = Jp0*x3
    x159 = x109*x158
    x160 = 8*x109
    x161 = x47*x6
    x162 = 4*Jp0
    x163 = r**3
    x164 = 4*x163
    x165 = 12*x163
    x166 = 24*x137
    x167 = t*x0
    x168 = t*x4
    x169 = x137*x5
    x170 = Jp0**2
    x171 = r*x170
    x172 = x171*x2
    x173 = B0**4
    x174 = X0**4
    x175 = x173*x174
    x176 = t**3
    x177 = 4*x176
    x178 = Jp1*x80
    x179 = X1*r**4
    x180 = B0*x119
    x181 = x171*x180
    x182 = t*x170
    x183 = x180*x182
    x184 = 12*x0
    x185 = 4*Jp1
    x186 = x0*x55
    x187 = x120*x5
    x188 = x119*x173
    x189 = 4*x188
    x190 = X1*t**4
    x191 = 12*x179
    x192 = x175*x5
    x193 = 36*x67
    x194 = x163*x98
    x195 = 24*x163
    x196 = X1*x176
    x197 = x188*x196
    x198 = 16*x163
    x199 = x196*x67
    x200 = Jp0*x180
    x201 = B1*x5
    x202 = x10*x185
    x203 = x108*x5
    x204 = x5*x53
    x205 = 24*x188
    x206 = Jp0*x119
    x207 = x101*x206
    x208 = -X0*x178 - t*x175*x184 + x101*x179 - x118*x197 - x120*x178 + x120*x202 - x143*x207 - x149*x79 + x149*x81 + x164*x175 - x164*x99 + x172 - x175*x177 + x179*x189 + x181 - x183 - x185*x186 - x187*x20 - x188*x198*x98 + x189*x190 + x191*x31 + x191*x67 + x192*x96 - x193*x194 + x193*x204 - x195*x31*x98 - x199*x96 + 2*x200*x201 + x200*x81 + x202*x55 + 12*x203 + x204*x205
    x209 = x137*x165 + x164*x7 + x165*x3 - x166*x167 - 12*x168 + x169*x96 + x208
    x210 = x137*x167
    x211 = t*x8
    x212 = x166*x5
    x213 = r*x212 - x137*x177 + x137*x198 + x164 - 36*x168 + x195*x3 + x198*x7 + x208 - 36*x210 - 12*x211 + x6*x96
    x214 = X1*x126 - x109*x145*x58 + x109*x156 + x109*x157 + x110*x162*x7 - x115*x133 - x116*x13*x98 + x116*x56 + x117 - x120*x155 + x122 - x123 - 32*x124*x51 + x125 + x128 + x129 - x130 + x131*x132 - 4*x134*x61 + x135*x136 + x136*x144 + x139 - x141 - x142 + x147 - x148*x4 - x148*x6 + x151*x159 - x152 + x153 + x154 - x155*x55 - x159*x74 - x160*x161 + x209*x47 - x213*x47
    x215 = (1/8)/(r*x18)
    x216 = r*x114
    x217 = x24*x84
    x218 = 8*x84
    x219 = x18*x218
    x220 = x0*x217
    x221 = 2*x170
    x222 = X1*x221
    x223 = x84**2
    x224 = x223*x59
    x225 = x109*x18
    x226 = 16*x225
    x227 = 8*x225
    x228 = -x109
    x229 = x228**2
    x230 = x223*x228
    x231 = x59*x84
    x232 = x221*x231
    x233 = x228*x84
    x234 = 2*x233
    x235 = x170*x234
    x236 = -x93
    x237 = 2*X0*x222*x230 + 2*X0*x235*x71 + 2*t*x109*x30 + 2*t*x218*x23 + 2*t*x219*x37 - 2*x104*x227 + 2*x105*x227 - 2*x106*x227 + 2*x107*x227 - 2*x108*x227 - 2*x118*x23*x84 - 2*x13*x226 - 2*x160*x19*x40 + 2*x17*x236*x48 + 2*x21*x84 + 2*x217*x26 - 2*x217*x3 - 2*x217*x41 - 2*x217*x45 - 2*x217 + 2*x219*x43 - 2*x219*x7 - 2*x22*x225 - 2*x220*x25 - 2*x220*x39 - 2*x220*x42 + 2*x222*x224*x7 + 2*x227*x90 + 2*x229*x24 + 2*x232*x7*x71 + 2*x24*x52 - 2*x30*x84 + 2*x34*x84
    x238 = x18*x51
    x239 = 32*x238
    x240 = x134*x46
    x241 = 16*x85
    x242 = X0*x0
    x243 = x115*x225
    x244 = x145*x230
    x245 = x158*x230
    x246 = x229*x84
    x247 = -x209
    x248 = x17*x84
    x249 = -x17*x213
    x250 = -Jp0*x233*x59*x94 - x107*x146*x223 - x116*x18*x57 + x117*x18 + x12*x244 + x120*x135*x230 + x122*x18 - x123*x18 - x124*x239 + x125*x18 + x126*x19 + x128*x223 + x129*x223 - x130*x223 - x132*x19*x51 + x136*x223*x241 + x139*x223 - x141*x223 - x142*x223 + x144*x225*x55 + x147*x223 - x151*x245 - x152*x223 + x153*x223 + x154*x223 - x156*x230 - x157*x230 + 8*x161*x230 - x186*x243 - x201*x226*x55 + x223*x240 + 8*x224*x92 + x225*x28*x82 + x230*x241*x55 + x238*x28 + x239*x56 - x240*x246 - x242*x243 - x244*x57 + x244*x58 + x245*x74 + x247*x248*x47 - x249*x47*x84
    x251 = x114*x250
    x252 = r*(x113*x237 - x251)
    x253 = x112*x250
    x254 = 4*B1
    x255 = -x50
    x256 = x255*x86
    x257 = 6*Jp1*x248
    x258 = t*x248
    x259 = 24*x258
    x260 = x170*x2
    x261 = 48*x248
    x262 = x195*x84
    x263 = x185*x84
    x264 = x218*x62
    x265 = 48*x163
    x266 = x71*x84
    x267 = 72*x248
    x268 = 24*x84
    x269 = x179*x268
    x270 = x127*x59
    x271 = 4*x143
    x272 = x188*x59
    x273 = x218*x59
    x274 = B0**5
    x275 = x174*x274
    x276 = x273*x275
    x277 = x67*x71
    x278 = x131*x162*x84
    x279 = Jp1*x10*x218
    x280 = x3*x84
    x281 = 2*x120*x231
    x282 = x167*x84
    x283 = 24*x282
    x284 = x173*x2
    x285 = x284*x59
    x286 = r*x5
    x287 = x119*x274
    x288 = x273*x287
    x289 = x275*x59
    x290 = x0*x120
    x291 = r*x196
    x292 = x194*x231
    x293 = 72*x284
    x294 = 32*x287
    x295 = x204*x231
    x296 = x218*x228
    x297 = x163*x296
    x298 = 32*x233
    x299 = x163*x298
    x300 = x179*x296
    x301 = x185*x233
    x302 = 24*x233
    x303 = Jp1*x296
    x304 = x10*x303
    x305 = x149*x228
    x306 = x305*x84
    x307 = x179*x302
    x308 = x176*x296
    x309 = x207*x233
    x310 = 48*x233
    x311 = r*x302
    x312 = 72*x233
    x313 = x312*x67
    x314 = x88*(B0*x300 + B1*x0*x309 - B1*x101*x119*x256 - Jp0*x120*x143*x273 - Jp1*x273*x4 + r*x169*x310 - r*x197*x298 - t*x267*x53*x67 - x0*x138*x263 + x0*x166*x248 + x0*x254*x306 - x10*x137*x261 - x10*x267*x3 + x102*x206*x255*x84 + x103*x163*x218 - x104*x259 - 96*x108*x258 - x12*x257 + x120*x304 - x13*x259 - x133*x263 + x136*x279 + x137*x299 - x137*x308 + x138*x279 - x143*x200*x296 + x163*x276 - x167*x175*x302 - x168*x312 - x169*x263*x59 + x17*x247*x95 + x170*x280*x60 + x171*x281 + x172*x234 + x175*x297 - x175*x308 - x176*x268*x277 - x176*x276 + x179*x264 + x179*x288 + x181*x234 - x182*x281 - x183*x234 + x184*x248 + x186*x278 - x186*x303 + x187*x278 - x187*x301 + x188*x190*x296 - x188*x194*x298 + x188*x204*x310 + x188*x300 + x190*x288 + x192*x311 - x194*x264 - x194*x31*x310 - x194*x313 - 48*x194*x75*x84 - x199*x311 - x2*x254*x256 + x201*x309 + x203*x302 + x204*x268*x75 + x204*x313 + x205*x231*x286 - x210*x312 - x211*x302 + x212*x248 + x228*x249 + x228*x265*x280 - x231*x291*x294 + x232*x56 + x235*x55*x59 - x236*x270 - x236*x305 - x242*x301 + x246*x260 + x248*x260 + 60*x248*x4 + 12*x248*x6 - x257*x56 + x257*x57 + x261*x8 + x262*x272 + x262*x277 + x262*x68 + x262*x97 + x265*x266*x31 + 48*x266*x36*x5 - x268*x285*x291 + x268*x286*x289 + x269*x285 + x269*x75 - x270*x271*x84 - x271*x306 - 48*x272*x282 + 72*x277*x286*x84 + x278*x290 - x283*x289 - x283*x68 + 48*x287*x295 - x290*x301 - x292*x293 - x292*x294 + x293*x295 - x297*x99 + x297 + x299*x7 + x304*x55 + x307*x31 + x307*x67 + x311*x6)
    x315 = r*x253 + x114*x314
    x316 = (1/8)/(x0*x17**4)
    return (-1/4*(t*x71*x73 - x12*x64 - x17*x65 - x17*x69 + x17*x70 - x17*x76 - x18*x38 - x18*x44 - x21 + x22*x23 - x24*x26 + x24*x3 + x24*x41 + x24*x45 + x25*x27 + x27*x39 + x27*x42 + x30 - x34 + x46*x52 + x46*x61 - x48*x93 + x54*x64 - x71*x78)/x17**3, x215*(x111*x113 - x114*x214), x215*(x111*x216 + x112*x214), x316*(-x112*x252 + x114*x315), -x316*(x112*x315 + x114*x252), -x316*(x112*(r*x251 - x112*x314) + x216*(x216*x237 + x253)),)
