#pragma once

#include <string_view>

namespace styloai::detail {

// Raw lexicon texts compiled in from resources/lexicons/.
extern const std::string_view kStopWordsTxt;
extern const std::string_view kCommon5000Txt;
extern const std::string_view kEmotionWordsTxt;
extern const std::string_view kSentimentTxt;
extern const std::string_view kGazetteerTxt;

}  // namespace styloai::detail
