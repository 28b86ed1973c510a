#include "diffset/reference_data.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace diffset::reference {

namespace {

constexpr std::array<std::uint64_t, 1> kN0{1};
constexpr std::array<std::uint64_t, 2> kN1{1, 1};
constexpr std::array<std::uint64_t, 4> kN2{1, 2, 0, 1};
constexpr std::array<std::uint64_t, 6> kN3{1, 3, 0, 3, 0, 1};
constexpr std::array<std::uint64_t, 8> kN4{1, 4, 0, 6, 0, 2, 0, 3};
constexpr std::array<std::uint64_t, 10> kN5{1, 5, 0, 10, 0, 4, 0, 8, 0, 4};
constexpr std::array<std::uint64_t, 12> kN6{1, 6, 0, 15, 0, 6, 0, 17, 0, 10, 0, 9};
constexpr std::array<std::uint64_t, 14> kN7{1, 7, 0, 21, 0, 9, 0, 31, 0, 17, 0, 25, 0, 17};
constexpr std::array<std::uint64_t, 16> kN8{1, 8, 0, 28, 0, 12, 0, 51, 0, 27, 0, 47, 0, 49, 0, 33};
constexpr std::array<std::uint64_t, 18> kN9{1, 9, 0, 36, 0, 16, 0, 77, 0, 43, 0, 77, 0, 97, 0, 93, 0, 63};
constexpr std::array<std::uint64_t, 20> kN10{1, 10, 0, 45, 0, 20, 0, 112, 0, 62, 0, 113, 0, 169, 0, 177, 0, 187, 0, 128};
constexpr std::array<std::uint64_t, 22> kN11{1, 11, 0, 55, 0, 25, 0, 155, 0, 85, 0, 170, 0, 269, 0, 275, 0, 377, 0, 377, 0, 248};
constexpr std::array<std::uint64_t, 24> kN12{1, 12, 0, 66, 0, 30, 0, 208, 0, 113, 0, 237, 0, 409, 0, 402, 0, 629, 0, 747, 0, 747, 0, 495};
constexpr std::array<std::uint64_t, 26> kN13{1, 13, 0, 78, 0, 36, 0, 272, 0, 148, 0, 319, 0, 606, 0, 549, 0, 973, 0, 1228, 0, 1509, 0, 1472, 0, 988};
constexpr std::array<std::uint64_t, 28> kN14{1, 14, 0, 91, 0, 42, 0, 348, 0, 189, 0, 413, 0, 863, 0, 730, 0, 1417, 0, 1850, 0, 2507, 0, 2975, 0, 2975, 0, 1969};
constexpr std::array<std::uint64_t, 30> kN15{1, 15, 0, 105, 0, 49, 0, 436, 0, 236, 0, 531, 0, 1195, 0, 967, 0, 1978, 0, 2642, 0, 3770, 0, 4999, 0, 6022, 0, 5911, 0, 3911};
constexpr std::array<std::uint64_t, 32> kN16{1, 16, 0, 120, 0, 56, 0, 539, 0, 289, 0, 666, 0, 1607, 0, 1238, 0, 2688, 0, 3633, 0, 5338, 0, 7519, 0, 10104, 0, 11985, 0, 11880, 0, 7857};
constexpr std::array<std::uint64_t, 34> kN17{1, 17, 0, 136, 0, 64, 0, 656, 0, 352, 0, 825, 0, 2115, 0, 1562, 0, 3628, 0, 4849, 0, 7271, 0, 10654, 0, 15278, 0, 20192, 0, 24103, 0, 23734, 0, 15635};
constexpr std::array<std::uint64_t, 36> kN18{1, 18, 0, 153, 0, 72, 0, 789, 0, 423, 0, 1000, 0, 2735, 0, 1932, 0, 4765, 0, 6340, 0, 9641, 0, 14499, 0, 21596, 0, 30501, 0, 40524, 0, 48377, 0, 47474, 0, 31304};
constexpr std::array<std::uint64_t, 38> kN19{1, 19, 0, 171, 0, 81, 0, 939, 0, 501, 0, 1206, 0, 3492, 0, 2355, 0, 6151, 0, 8278, 0, 12469, 0, 19129, 0, 29249, 0, 43062, 0, 61350, 0, 81542, 0, 96676, 0, 94885, 0, 62732};
constexpr std::array<std::uint64_t, 40> kN20{1, 20, 0, 190, 0, 90, 0, 1107, 0, 588, 0, 1430, 0, 4393, 0, 2829, 0, 7794, 0, 10580, 0, 15909, 0, 24681, 0, 38430, 0, 58148, 0, 86236, 0, 123470, 0, 162994, 0, 193562, 0, 190623, 0, 125501};
constexpr std::array<std::uint64_t, 42> kN21{1, 21, 0, 210, 0, 100, 0, 1293, 0, 687, 0, 1691, 0, 5450, 0, 3345, 0, 9781, 0, 13381, 0, 20315, 0, 31221, 0, 49408, 0, 76121, 0, 115893, 0, 174352, 0, 246765, 0, 326913, 0, 388606, 0, 380805, 0, 250793};
constexpr std::array<std::uint64_t, 44> kN22{1, 22, 0, 231, 0, 110, 0, 1500, 0, 795, 0, 1970, 0, 6690, 0, 3946, 0, 12089, 0, 16603, 0, 25533, 0, 38903, 0, 62377, 0, 97667, 0, 150319, 0, 234160, 0, 347050, 0, 494449, 0, 656644, 0, 776640, 0, 763402, 0, 503203};
constexpr std::array<std::uint64_t, 46> kN23{1, 23, 0, 253, 0, 121, 0, 1727, 0, 913, 0, 2289, 0, 8130, 0, 4613, 0, 14774, 0, 20474, 0, 31893, 0, 48354, 0, 77572, 0, 123155, 0, 190510, 0, 304245, 0, 465537, 0, 696108, 0, 993569, 0, 1312446, 0, 1557467, 0, 1528095, 0, 1006339};
constexpr std::array<std::uint64_t, 48> kN24{1, 24, 0, 276, 0, 132, 0, 1976, 0, 1042, 0, 2630, 0, 9790, 0, 5343, 0, 17861, 0, 24909, 0, 39392, 0, 59263, 0, 95318, 0, 153424, 0, 236824, 0, 385858, 0, 602109, 0, 931109, 0, 1396647, 0, 1985532, 0, 2633237, 0, 3117611, 0, 3061916, 0, 2014992};
constexpr std::array<std::uint64_t, 50> kN25{1, 25, 0, 300, 0, 144, 0, 2248, 0, 1184, 0, 3010, 0, 11699, 0, 6158, 0, 21464, 0, 30034, 0, 48297, 0, 72166, 0, 116803, 0, 188936, 0, 290286, 0, 480260, 0, 759570, 0, 1202343, 0, 1867806, 0, 2792117, 0, 3984017, 0, 5270104, 0, 6244117, 0, 6125358, 0, 4035985};
constexpr std::array<std::uint64_t, 52> kN26{1, 26, 0, 325, 0, 156, 0, 2544, 0, 1338, 0, 3419, 0, 13868, 0, 7029, 0, 25554, 0, 35835, 0, 58729, 0, 86779, 0, 141545, 0, 230785, 0, 351743, 0, 589088, 0, 939048, 0, 1512270, 0, 2404100, 0, 3726584, 0, 5596451, 0, 7970998, 0, 10557091, 0, 12494664, 0, 12278446, 0, 8080448};
constexpr std::array<std::uint64_t, 54> kN27{1, 27, 0, 351, 0, 169, 0, 2864, 0, 1504, 0, 3876, 0, 16325, 0, 7980, 0, 30192, 0, 42560, 0, 70921, 0, 103803, 0, 170669, 0, 281634, 0, 422400, 0, 713474, 0, 1145157, 0, 1865592, 0, 3013664, 0, 4795360, 0, 7469425, 0, 11195574, 0, 15968677, 0, 21122722, 0, 25038586, 0, 24564954, 0, 16169267};
constexpr std::array<std::uint64_t, 56> kN28{1, 28, 0, 378, 0, 182, 0, 3211, 0, 1682, 0, 4357, 0, 19094, 0, 9024, 0, 35439, 0, 50164, 0, 85023, 0, 122773, 0, 203518, 0, 340918, 0, 502848, 0, 855957, 0, 1379205, 0, 2266137, 0, 3697776, 0, 5994044, 0, 9586795, 0, 14913983, 0, 22417023, 0, 31935586, 0, 42321005, 0, 50090752, 0, 49200792, 0, 32397761};
constexpr std::array<std::uint64_t, 58> kN29{1, 29, 0, 406, 0, 196, 0, 3584, 0, 1876, 0, 4886, 0, 22202, 0, 10164, 0, 41365, 0, 58778, 0, 101393, 0, 144495, 0, 241453, 0, 411385, 0, 598252, 0, 1018020, 0, 1646202, 0, 2720935, 0, 4468556, 0, 7342144, 0, 11966365, 0, 19131301, 0, 29862931, 0, 44822674, 0, 63983506, 0, 84658919, 0, 100303312, 0, 98478615, 0, 64826967};
constexpr std::array<std::uint64_t, 60> kN30{1, 30, 0, 435, 0, 210, 0, 3985, 0, 2084, 0, 5443, 0, 25674, 0, 11384, 0, 47972, 0, 68336, 0, 120236, 0, 168711, 0, 283954, 0, 492735, 0, 705828, 0, 1202962, 0, 1948206, 0, 3236533, 0, 5330593, 0, 8845276, 0, 14608625, 0, 23822819, 0, 38239392, 0, 59651353, 0, 89749444, 0, 127967673, 0, 169496641, 0, 200765677, 0, 197164774, 0, 129774838};
constexpr std::array<std::uint64_t, 62> kN31{1, 31, 0, 465, 0, 225, 0, 4415, 0, 2305, 0, 6060, 0, 29543, 0, 12696, 0, 55334, 0, 79218, 0, 141992, 0, 195948, 0, 332047, 0, 587687, 0, 831558, 0, 1419676, 0, 2289594, 0, 3821295, 0, 6293553, 0, 10520512, 0, 17543417, 0, 29022146, 0, 47566626, 0, 76346946, 0, 119386846, 0, 179465499, 0, 256144840, 0, 339187677, 0, 401837351, 0, 394536002, 0, 259822143};
constexpr std::array<std::uint64_t, 64> kN32{1, 32, 0, 496, 0, 240, 0, 4875, 0, 2541, 0, 6707, 0, 33832, 0, 14093, 0, 63485, 0, 91199, 0, 166842, 0, 226062, 0, 385486, 0, 696368, 0, 972438, 0, 1664732, 0, 2673659, 0, 4483176, 0, 7368022, 0, 12382684, 0, 20782662, 0, 34739876, 0, 57804101, 0, 94783970, 0, 152607226, 0, 238552257, 0, 359073831, 0, 512453496, 0, 678805584, 0, 804070333, 0, 789993459, 0, 520063531};
constexpr std::array<std::uint64_t, 66> kN33{1, 33, 0, 528, 0, 256, 0, 5365, 0, 2795, 0, 7410, 0, 38569, 0, 15597, 0, 72583, 0, 104572, 0, 195124, 0, 259777, 0, 445578, 0, 821738, 0, 1134483, 0, 1947773, 0, 3121284, 0, 5231412, 0, 8567388, 0, 14456863, 0, 24369445, 0, 41039669, 0, 69047026, 0, 115036473, 0, 189351319, 0, 304816636, 0, 477185749, 0, 718291220, 0, 1025433250, 0, 1358091161, 0, 1609586119, 0, 1580640910, 0, 1040616486};
constexpr std::array<std::uint64_t, 68> kN34{1, 34, 0, 561, 0, 272, 0, 5888, 0, 3064, 0, 8143, 0, 43786, 0, 17216, 0, 82597, 0, 119214, 0, 227418, 0, 297046, 0, 511668, 0, 964188, 0, 1314383, 0, 2265195, 0, 3619723, 0, 6075752, 0, 9903780, 0, 16757210, 0, 28318130, 0, 47936336, 0, 81288502, 0, 137031262, 0, 229343035, 0, 377630128, 0, 609113912, 0, 953949620, 0, 1436715877, 0, 2051059855, 0, 2717986051, 0, 3220331421, 0, 3163602123, 0, 2083345793};
constexpr std::array<std::uint64_t, 70> kN35{1, 35, 0, 595, 0, 289, 0, 6443, 0, 3349, 0, 8940, 0, 49515, 0, 18941, 0, 93598, 0, 135569, 0, 263837, 0, 338522, 0, 585268, 0, 1126614, 0, 1519559, 0, 2627654, 0, 4191609, 0, 7058965, 0, 11391366, 0, 19313503, 0, 32680465, 0, 55509344, 0, 94666428, 0, 160950680, 0, 272803379, 0, 456991110, 0, 754212597, 0, 1217261287, 0, 1907636501, 0, 2873264810, 0, 4104228068, 0, 5437313809, 0, 6444236200, 0, 6330608624, 0, 4168640894};
constexpr std::array<std::uint64_t, 72> kN36{1, 36, 0, 630, 0, 306, 0, 7032, 0, 3651, 0, 9776, 0, 55787, 0, 20767, 0, 105615, 0, 153328, 0, 304894, 0, 383708, 0, 666132, 0, 1309990, 0, 1747229, 0, 3032028, 0, 4824889, 0, 8161491, 0, 13047575, 0, 22151419, 0, 37482058, 0, 63800433, 0, 109216351, 0, 186816887, 0, 319629353, 0, 542473471, 0, 911317415, 0, 1505590283, 0, 2432498687, 0, 3813305230, 0, 5747795503, 0, 8208838614, 0, 10879185718, 0, 12894355828, 0, 12668987317, 0, 8342197304};

constexpr std::array<std::span<const std::uint64_t>, 37> kTables{
    std::span<const std::uint64_t>(kN0),
    std::span<const std::uint64_t>(kN1),
    std::span<const std::uint64_t>(kN2),
    std::span<const std::uint64_t>(kN3),
    std::span<const std::uint64_t>(kN4),
    std::span<const std::uint64_t>(kN5),
    std::span<const std::uint64_t>(kN6),
    std::span<const std::uint64_t>(kN7),
    std::span<const std::uint64_t>(kN8),
    std::span<const std::uint64_t>(kN9),
    std::span<const std::uint64_t>(kN10),
    std::span<const std::uint64_t>(kN11),
    std::span<const std::uint64_t>(kN12),
    std::span<const std::uint64_t>(kN13),
    std::span<const std::uint64_t>(kN14),
    std::span<const std::uint64_t>(kN15),
    std::span<const std::uint64_t>(kN16),
    std::span<const std::uint64_t>(kN17),
    std::span<const std::uint64_t>(kN18),
    std::span<const std::uint64_t>(kN19),
    std::span<const std::uint64_t>(kN20),
    std::span<const std::uint64_t>(kN21),
    std::span<const std::uint64_t>(kN22),
    std::span<const std::uint64_t>(kN23),
    std::span<const std::uint64_t>(kN24),
    std::span<const std::uint64_t>(kN25),
    std::span<const std::uint64_t>(kN26),
    std::span<const std::uint64_t>(kN27),
    std::span<const std::uint64_t>(kN28),
    std::span<const std::uint64_t>(kN29),
    std::span<const std::uint64_t>(kN30),
    std::span<const std::uint64_t>(kN31),
    std::span<const std::uint64_t>(kN32),
    std::span<const std::uint64_t>(kN33),
    std::span<const std::uint64_t>(kN34),
    std::span<const std::uint64_t>(kN35),
    std::span<const std::uint64_t>(kN36)};

constexpr std::array<std::uint64_t, 24> kConditionedFringe23{
    8592305829704, 4442759682300, 2367846591103, 1174068145740, 559669653171, 256031157923, 114186380080, 49736070308, 21123843993, 8778930083, 3543398884, 1378772067, 508048560, 174732658, 54900922, 15344643, 3692910, 737437, 116855, 13885, 1134, 55, 1, 0};

}  // namespace

std::span<const std::uint64_t> diff_counts(int n) {
    if (n < 0 || n > kMaxTabulatedN) {
        throw std::out_of_range("no tabulated counts for n = " + std::to_string(n));
    }
    return kTables[static_cast<std::size_t>(n)];
}

std::span<const std::uint64_t> conditioned_fringe_counts_m23() { return kConditionedFringe23; }

}  // namespace diffset::reference
