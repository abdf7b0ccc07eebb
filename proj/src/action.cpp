#include "cremona/action.hpp"

#include <sstream>

namespace cremona {

std::string ImageGroup::evidence() const {
  std::ostringstream os;
  os << "source=" << source_order << " kernel=" << kernel_order << " image=" << image_order
     << " fibres_uniform=" << fibres_uniform << " homomorphism=" << homomorphism << "/" << products_checked
     << " involutions=" << signature.involutions() << " label=" << label;
  return os.str();
}

std::string GroupReport::evidence() const {
  std::ostringstream os;
  os << "order=" << signature.order << " center=" << signature.center_order
     << " involutions=" << signature.involutions() << " label=" << label;
  return os.str();
}

std::vector<Mat2<F61>> binary_generators_f61() {
  std::vector<Mat2<F61>> out;
  for (const auto& g : icosahedral().generators) out.push_back(reduce_mod_p<kModelPrime>(g));
  return out;
}

}  // namespace cremona
