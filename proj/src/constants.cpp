// SPDX-License-Identifier: Apache-2.0
#include "qpoch/constants.hpp"

#include <string>

namespace qpoch {

namespace {

// gamma = 0.5772..., 1320 significant digits (~4385 bits).
constexpr const char* kEulerGammaDigits =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677"
    "7664670936947063291746749514631447249807082480960504014486542836224173997644"
    "9235362535003337429373377376739427925952582470949160087352039481656708532331"
    "5177661152862119950150798479374508570574002992135478614669402960432542151905"
    "8775535267331399254012967420513754139549111685102807984234877587205038431093"
    "9973613725530608893312676001724795378367592713515772261027349291394079843010"
    "3417771778088154957066107501016191663340152278935867965497252036212879226555"
    "9536696281763887927268013243101047650596370394739495763890657296792960100901"
    "5125195950922243501409349871228247949747195646976318506676129063811051824197"
    "4448678363808617494551698927923018773910729457815543160050021828440960537724"
    "3420328547836701517739439870030237033951832869000155819398804270741154222781"
    "9716523011073565833967348717650491941812300040654693142999297779569303100503"
    "0863034185698032310836916400258929708909854868257773642882539549258736295961"
    "3329857473930237343884707037028441292016641785024873337908056275499843459076"
    "1643167103146710722370021810745044418664759134803669025532458625442225345181"
    "3879124345735013612977822782881489459098638460062931694718871495875254923664"
    "9352047324364109726827616087759508809512620840454447799229915724829251625127"
    "842765965708321461029821461795"
    ;

}  // namespace

Real const_pi(Precision prec) {
  Real r(prec.guarded());
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r.rounded(prec);
}

Real const_euler_gamma(Precision prec) {
  if (prec.bits > kEulerGammaCapacityBits) {
    throw PrecisionError("Euler's constant is stored to " + std::to_string(kEulerGammaCapacityBits) +
                         " bits; requested " + std::to_string(prec.bits));
  }
  Real r(prec.guarded());
  mpfr_set_str(r.raw(), kEulerGammaDigits, 10, MPFR_RNDN);
  return r.rounded(prec);
}

Real const_log2(Precision prec) {
  Real r(prec.guarded());
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r.rounded(prec);
}

Real const_log_2pi(Precision prec) {
  const Precision w = prec.guarded();
  Real two_pi = ldexp(const_pi(w), 1);
  return log(two_pi).rounded(prec);
}

}  // namespace qpoch
