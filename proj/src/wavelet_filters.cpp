#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "wavediff/wavelet.hpp"

namespace wavediff::wavelet {

namespace {

// Daubechies extremal-phase scaling taps, K = 2..10 vanishing moments.
//
// Generated by spectral factorization of the half-band polynomial
// B(y) = sum_{k<K} C(K-1+k,k) y^k: Durand-Kerner root finding in 80-bit
// extended precision, minimum-modulus root selection, coefficients
// normalized to sum h = sqrt(2) and printed to 18 significant digits.
// db2 agrees with the closed form {(1+s3), (3+s3), (3-s3), (1-s3)}/(4 sqrt 2),
// s3 = sqrt(3); all tables satisfy the orthonormality and vanishing-moment
// identities to below 1e-18.

constexpr std::array<double, 4> kDb2{
    4.82962913144534143e-01,
    8.36516303737807906e-01,
    2.24143868042013381e-01,
    -1.29409522551260381e-01,
};

constexpr std::array<double, 6> kDb3{
    3.32670552950082616e-01,
    8.06891509311092576e-01,
    4.59877502118491570e-01,
    -1.35011020010254589e-01,
    -8.54412738820266617e-02,
    3.52262918857095366e-02,
};

constexpr std::array<double, 8> kDb4{
    2.30377813308896501e-01,
    7.14846570552915647e-01,
    6.30880767929858908e-01,
    -2.79837694168598543e-02,
    -1.87034811719093084e-01,
    3.08413818355607636e-02,
    3.28830116668851997e-02,
    -1.05974017850690321e-02,
};

constexpr std::array<double, 10> kDb5{
    1.60102397974192914e-01,
    6.03829269797189670e-01,
    7.24308528437772928e-01,
    1.38428145901320732e-01,
    -2.42294887066382032e-01,
    -3.22448695846383747e-02,
    7.75714938400457135e-02,
    -6.24149021279827427e-03,
    -1.25807519990819995e-02,
    3.33572528547377128e-03,
};

constexpr std::array<double, 12> kDb6{
    1.11540743350109464e-01,
    4.94623890398453086e-01,
    7.51133908021095351e-01,
    3.15250351709197629e-01,
    -2.26264693965439820e-01,
    -1.29766867567261936e-01,
    9.75016055873230492e-02,
    2.75228655303057286e-02,
    -3.15820393174860296e-02,
    5.53842201161496143e-04,
    4.77725751094551064e-03,
    -1.07730108530847957e-03,
};

constexpr std::array<double, 14> kDb7{
    7.78520540850091791e-02,
    3.96539319481917307e-01,
    7.29132090846235120e-01,
    4.69782287405193123e-01,
    -1.43906003928564976e-01,
    -2.24036184993874983e-01,
    7.13092192668302647e-02,
    8.06126091510830720e-02,
    -3.80299369350144136e-02,
    -1.65745416306668807e-02,
    1.25509985560998406e-02,
    4.29577972921366518e-04,
    -1.80164070404749092e-03,
    3.53713799974520249e-04,
};

constexpr std::array<double, 16> kDb8{
    5.44158422431040099e-02,
    3.12871590914299971e-01,
    6.75630736297289807e-01,
    5.85354683654206713e-01,
    -1.58291052563493058e-02,
    -2.84015542961546926e-01,
    4.72484573913282858e-04,
    1.28747426620478459e-01,
    -1.73693010018075461e-02,
    -4.40882539307947515e-02,
    1.39810279173982816e-02,
    8.74609404740577673e-03,
    -4.87035299345157431e-03,
    -3.91740373376947046e-04,
    6.75449406450569366e-04,
    -1.17476784124769534e-04,
};

constexpr std::array<double, 18> kDb9{
    3.80779473638783466e-02,
    2.43834674612590354e-01,
    6.04823123690111112e-01,
    6.57288078051300538e-01,
    1.33197385825007576e-01,
    -2.93273783279174909e-01,
    -9.68407832229764602e-02,
    1.48540749338106380e-01,
    3.07256814793333794e-02,
    -6.76328290613299738e-02,
    2.50947114831451961e-04,
    2.23616621236790972e-02,
    -4.72320475775139729e-03,
    -4.28150368246342983e-03,
    1.84764688305622648e-03,
    2.30385763523195967e-04,
    -2.51963188942710137e-04,
    3.93473203162715995e-05,
};

constexpr std::array<double, 20> kDb10{
    2.66700579005555536e-02,
    1.88176800077691489e-01,
    5.27201188931725586e-01,
    6.88459039453603566e-01,
    2.81172343660577461e-01,
    -2.49846424327315379e-01,
    -1.95946274377377043e-01,
    1.27369340335793260e-01,
    9.30573646035723514e-02,
    -7.13941471663970874e-02,
    -2.94575368218758127e-02,
    3.32126740593410017e-02,
    3.60655356695616963e-03,
    -1.07331754833305750e-02,
    1.39535174705290116e-03,
    1.99240529518505612e-03,
    -6.85856694959711627e-04,
    -1.16466855129285451e-04,
    9.35886703200695914e-05,
    -1.32642028945212448e-05,
};

WaveletFilter make(std::string name, std::span<const double> lowpass) {
    WaveletFilter f;
    f.name = std::move(name);
    f.lowpass.assign(lowpass.begin(), lowpass.end());
    const std::size_t L = f.lowpass.size();
    f.highpass.resize(L);
    for (std::size_t k = 0; k < L; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        f.highpass[k] = sign * f.lowpass[L - 1 - k];
    }
    return f;
}

}  // namespace

WaveletFilter WaveletFilter::from_name(std::string_view name) {
    static const double kHaar[2] = {0.7071067811865475244, 0.7071067811865475244};
    if (name == "haar" || name == "db1") return make("haar", kHaar);
    if (name == "db2") return make("db2", kDb2);
    if (name == "db3") return make("db3", kDb3);
    if (name == "db4") return make("db4", kDb4);
    if (name == "db5") return make("db5", kDb5);
    if (name == "db6") return make("db6", kDb6);
    if (name == "db7") return make("db7", kDb7);
    if (name == "db8") return make("db8", kDb8);
    if (name == "db9") return make("db9", kDb9);
    if (name == "db10") return make("db10", kDb10);
    throw std::invalid_argument("unknown wavelet filter '" + std::string(name) +
                                "'; available: haar, db2..db10");
}

const std::vector<std::string>& WaveletFilter::available() {
    static const std::vector<std::string> names{"haar", "db2", "db3", "db4", "db5",
                                                "db6", "db7", "db8", "db9", "db10"};
    return names;
}

}  // namespace wavediff::wavelet
