#pragma once

namespace mltrt {

// Unit system: lengths in cm, time in shakes (1 sh = 1e-8 s), temperatures
// and photon energies in keV, energy in jerks (1 Jk = 1e9 J).
struct UnitSystem {
  double c = 299.792458;   // speed of light [cm/sh]
  double a_rad = 0.013720; // radiation constant [Jk cm^-3 keV^-4]
};

} // namespace mltrt
