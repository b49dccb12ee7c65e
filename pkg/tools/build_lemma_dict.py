#!/usr/bin/env python3
"""Regenerate src/medtriage/data/lemmas.tsv from the embedded lexicon.

The runtime lemmatizer is a plain dictionary lookup; this script is where
the dictionary comes from. It expands a base lexicon of noun, verb, and
adjective lemmas with regular English inflection rules (plural -s/-es/-ies,
verb -s/-ed/-ing with e-drop and consonant doubling, adjective -er/-est),
adds a table of irregular forms and Latin/Greek medical plurals, folds in
-ise spelling variants for -ize verbs, and closes the map transitively so
every surface points at a terminal root. Output is sorted and stable.

Run from the repository root:

    python tools/build_lemma_dict.py
"""

from pathlib import Path

OUT_PATH = Path(__file__).resolve().parents[1] / "src" / "medtriage" / "data" / "lemmas.tsv"

VOWELS = "aeiou"

# Verbs whose final consonant doubles before -ed/-ing (stress-dependent in
# English, so it has to be a list, not a rule).
DOUBLE_FINAL = set("""
admit ban bat beg blur bud chat chip chop clap clip commit compel confer
control crop dab defer dim dip dot drag drip drop drum emit equip excel
fan fit flag flap flip flop gel grab grin grip hop hug incur infer jam jog
knit knot map mop mug nag net nod occur omit pad pat patrol peg permit pet
pin pit plan plod plot plug prefer prod propel pup recur refer regret remit
repel rip rob rot rub sag scan scar scrub shop shred shrug shun sip skid
skim skip slam slap slip slot snap sob span spot star stem step stir stop
strap strip stun submit sum swap tag tan tap throb tip top transfer
transmit trap trek trim trip trot tug wag wed wet whip wrap zip
""".split())

# Irregular verbs: base -> (past, past participle). The regular -s/-ing
# forms of these bases are still generated by rule.
IRREGULAR_VERBS = {
    "arise": ("arose", "arisen"),
    "awake": ("awoke", "awoken"),
    "bear": ("bore", "borne"),
    "beat": ("beat", "beaten"),
    "become": ("became", "become"),
    "begin": ("began", "begun"),
    "bend": ("bent", "bent"),
    "bet": ("bet", "bet"),
    "bind": ("bound", "bound"),
    "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"),
    "blow": ("blew", "blown"),
    "break": ("broke", "broken"),
    "breed": ("bred", "bred"),
    "bring": ("brought", "brought"),
    "broadcast": ("broadcast", "broadcast"),
    "build": ("built", "built"),
    "burst": ("burst", "burst"),
    "buy": ("bought", "bought"),
    "cast": ("cast", "cast"),
    "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"),
    "come": ("came", "come"),
    "cost": ("cost", "cost"),
    "creep": ("crept", "crept"),
    "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"),
    "dive": ("dove", "dived"),
    "draw": ("drew", "drawn"),
    "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"),
    "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"),
    "feed": ("fed", "fed"),
    "feel": ("felt", "felt"),
    "fight": ("fought", "fought"),
    "find": ("found", "found"),
    "flee": ("fled", "fled"),
    "fling": ("flung", "flung"),
    "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"),
    "forecast": ("forecast", "forecast"),
    "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"),
    "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"),
    "give": ("gave", "given"),
    "go": ("went", "gone"),
    "grind": ("ground", "ground"),
    "grow": ("grew", "grown"),
    "hang": ("hung", "hung"),
    "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"),
    "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"),
    "keep": ("kept", "kept"),
    "kneel": ("knelt", "knelt"),
    "know": ("knew", "known"),
    "lay": ("laid", "laid"),
    "lead": ("led", "led"),
    "leap": ("leapt", "leapt"),
    "leave": ("left", "left"),
    "lend": ("lent", "lent"),
    "let": ("let", "let"),
    "lie": ("lay", "lain"),
    "light": ("lit", "lit"),
    "lose": ("lost", "lost"),
    "make": ("made", "made"),
    "mean": ("meant", "meant"),
    "meet": ("met", "met"),
    "mistake": ("mistook", "mistaken"),
    "overcome": ("overcame", "overcome"),
    "oversee": ("oversaw", "overseen"),
    "pay": ("paid", "paid"),
    "put": ("put", "put"),
    "quit": ("quit", "quit"),
    "read": ("read", "read"),
    "rebuild": ("rebuilt", "rebuilt"),
    "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"),
    "rise": ("rose", "risen"),
    "run": ("ran", "run"),
    "say": ("said", "said"),
    "see": ("saw", "seen"),
    "seek": ("sought", "sought"),
    "sell": ("sold", "sold"),
    "send": ("sent", "sent"),
    "set": ("set", "set"),
    "shake": ("shook", "shaken"),
    "shed": ("shed", "shed"),
    "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"),
    "shrink": ("shrank", "shrunk"),
    "shut": ("shut", "shut"),
    "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"),
    "sit": ("sat", "sat"),
    "sleep": ("slept", "slept"),
    "slide": ("slid", "slid"),
    "speak": ("spoke", "spoken"),
    "speed": ("sped", "sped"),
    "spend": ("spent", "spent"),
    "spin": ("spun", "spun"),
    "spit": ("spat", "spat"),
    "split": ("split", "split"),
    "spread": ("spread", "spread"),
    "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"),
    "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"),
    "strike": ("struck", "struck"),
    "strive": ("strove", "striven"),
    "swear": ("swore", "sworn"),
    "sweep": ("swept", "swept"),
    "swell": ("swelled", "swollen"),
    "swim": ("swam", "swum"),
    "swing": ("swung", "swung"),
    "take": ("took", "taken"),
    "teach": ("taught", "taught"),
    "tear": ("tore", "torn"),
    "tell": ("told", "told"),
    "think": ("thought", "thought"),
    "throw": ("threw", "thrown"),
    "undergo": ("underwent", "undergone"),
    "understand": ("understood", "understood"),
    "undertake": ("undertook", "undertaken"),
    "uphold": ("upheld", "upheld"),
    "upset": ("upset", "upset"),
    "wake": ("woke", "woken"),
    "wear": ("wore", "worn"),
    "weep": ("wept", "wept"),
    "win": ("won", "won"),
    "wind": ("wound", "wound"),
    "withdraw": ("withdrew", "withdrawn"),
    "withhold": ("withheld", "withheld"),
    "write": ("wrote", "written"),
}

# Irregular noun plurals, including the Latin/Greek forms common in
# clinical text.
IRREGULAR_PLURALS = {
    "addenda": "addendum",
    "alumni": "alumnus",
    "alveoli": "alveolus",
    "analyses": "analysis",
    "anastomoses": "anastomosis",
    "antennae": "antenna",
    "aortae": "aorta",
    "apices": "apex",
    "appendices": "appendix",
    "atria": "atrium",
    "axes": "axis",
    "bacilli": "bacillus",
    "bacteria": "bacterium",
    "bases": "basis",
    "bronchi": "bronchus",
    "bullae": "bulla",
    "bursae": "bursa",
    "calculi": "calculus",
    "calves": "calf",
    "cannulae": "cannula",
    "cervices": "cervix",
    "children": "child",
    "conjunctivae": "conjunctiva",
    "corpora": "corpus",
    "cortices": "cortex",
    "crises": "crisis",
    "criteria": "criterion",
    "curricula": "curriculum",
    "diagnoses": "diagnosis",
    "dice": "die",
    "diverticula": "diverticulum",
    "ellipses": "ellipsis",
    "emboli": "embolus",
    "emphases": "emphasis",
    "epididymides": "epididymis",
    "feet": "foot",
    "femora": "femur",
    "fibulae": "fibula",
    "fistulae": "fistula",
    "foci": "focus",
    "foramina": "foramen",
    "formulae": "formula",
    "fossae": "fossa",
    "fungi": "fungus",
    "ganglia": "ganglion",
    "geese": "goose",
    "genera": "genus",
    "glomeruli": "glomerulus",
    "gyri": "gyrus",
    "halves": "half",
    "hooves": "hoof",
    "hypotheses": "hypothesis",
    "indices": "index",
    "knives": "knife",
    "labia": "labium",
    "larvae": "larva",
    "leaves": "leaf",
    "lice": "louse",
    "lives": "life",
    "loaves": "loaf",
    "lumina": "lumen",
    "matrices": "matrix",
    "maxillae": "maxilla",
    "media": "medium",
    "men": "man",
    "meninges": "meninx",
    "menisci": "meniscus",
    "metastases": "metastasis",
    "mice": "mouse",
    "naris": "nares",
    "nebulae": "nebula",
    "neuroses": "neurosis",
    "nuclei": "nucleus",
    "oases": "oasis",
    "ostia": "ostium",
    "ova": "ovum",
    "oxen": "ox",
    "parentheses": "parenthesis",
    "patellae": "patella",
    "pelves": "pelvis",
    "people": "person",
    "phalanges": "phalanx",
    "phenomena": "phenomenon",
    "pleurae": "pleura",
    "prognoses": "prognosis",
    "prostheses": "prosthesis",
    "psychoses": "psychosis",
    "radii": "radius",
    "scapulae": "scapula",
    "scarves": "scarf",
    "sclerae": "sclera",
    "septa": "septum",
    "sequelae": "sequela",
    "sheaves": "sheaf",
    "shelves": "shelf",
    "spectra": "spectrum",
    "stenoses": "stenosis",
    "stigmata": "stigma",
    "stimuli": "stimulus",
    "strata": "stratum",
    "sulci": "sulcus",
    "syntheses": "synthesis",
    "teeth": "tooth",
    "testes": "testis",
    "theses": "thesis",
    "thieves": "thief",
    "thrombi": "thrombus",
    "tibiae": "tibia",
    "ulnae": "ulna",
    "uteri": "uterus",
    "vertebrae": "vertebra",
    "vertices": "vertex",
    "villi": "villus",
    "viscera": "viscus",
    "vitae": "vita",
    "vortices": "vortex",
    "wives": "wife",
    "wolves": "wolf",
    "women": "woman",
}

# Gerunds that also occur as plural nouns ("findings", "feelings", ...).
GERUND_NOUNS = set("""
beginning being bleeding blessing briefing building burning clearing
coating covering craving crossing drawing dressing dripping ending
feeling filling finding fitting gathering grouping hearing holding
housing landing layering leaning learning listing marking meaning
meeting misgiving mooring offering opening outing packing padding
painting pairing paving planning plating pressing printing reading
recording rendering rinsing saying screening serving setting shaving
shooting sighting sitting spacing stabbing swelling tasting teaching
tracing trimming understanding undertaking warning wedding winding
wrapping writing
""".split())

NOUNS = """
abdomen ability abnormality abrasion abscess absence abutment academy
accent acceptance accessory accident accomplishment account accountant
accumulation accuracy ache achievement acid acne acre acronym act action
activity actor actress adaptation addict addition address adenoid
adhesion adjective adjustment administration administrator admission
adolescent adult advance advantage adventure adverb advertisement advice
adviser advocate affair affect afternoon age agency agenda agent
aggregate agreement aid aide ailment aim airway aisle alarm album
alcohol alert algorithm alias alibi allergen allergist allergy alliance
allocation allowance alloy ally almond alphabet alternative altitude
ambulance amendment amount amplitude amputation analogy analyst anatomy
ancestor anchor anecdote anemia anesthesia anesthesiologist anesthetic
aneurysm angel anger angina angiogram angioplasty angle angulation animal
ankle anniversary announcement annoyance anomaly answer ant antacid
antenna anthem antibiotic antibody anticoagulant antigen antihistamine
antiseptic anxiety aorta apartment apnea apology apparatus appeal
appearance appendectomy appendicitis appendix appetite applause apple
appliance applicant application appointment appraisal apprentice
approach approval apricot apron aptitude arcade arch architect
architecture archive area arena argument arm armpit army aroma
arrangement array arrest arrival arrow artery arthritis article
articulation artifact artist aspect asparagus aspect aspiration aspirin
assembly assertion assessment asset assignment assistance assistant
association assumption assurance asthma astronaut asymmetry athlete
atlas atmosphere atom atrophy attachment attack attempt attendance
attendant attention attic attitude attorney attraction attribute auction
audience audit auditor aunt aura author authority authorization autopsy
autumn avalanche avenue average aviation avocado award awareness axilla
axis baby back background backpack bacon badge bag baker bakery balance
balcony ball balloon ballot banana band bandage bank banker banner
banquet bar barbecue barber bargain barn barrel barrier base baseball
baseline basement basin basis basket bath bathroom battery battle bay
beach bead beam bean bear beard beat beauty bed bedroom bee beef beep
beer beet beetle behavior belief bell belly belt bench benefit berry
bias bicycle bid bike bile bill billboard bin binder biopsy bird birth
birthday biscuit bit bite blade blanket blast blaze bleach blend blender
blessing blister blizzard block blockage blood blouse blow blueprint
board boat body boil bolt bomb bond bone bonus book booklet boot booth
border bottle bottom boulder boundary bouquet boutique bowel bowl box
boy bracelet brace bracket brain brainstem branch brand bread break
breakfast breast breath breeze brick bride bridge briefcase brigade
brim broccoli brochure broker bronchus brook broom brother brow brush
bubble bucket buckle bud budget buffer bug builder building bulb bulge
bullet bulletin bump bundle bunion burden bureau burger burglar burn
burrow bus bush business businessman butcher butter butterfly button
bypass cabbage cabin cabinet cable cafe cafeteria cage cake calculation
calculator calendar calf call caller calorie camera camp campaign campus
canal cancer candidate candle candy cane cannula canoe canopy canteen
canvas canyon cap capacity cape capital capsule captain caption car
carbohydrate card cardigan cardiologist care career cargo carnival
carpenter carpet carriage carrier carrot cart cartilage cartoon
cartridge carving case cash cashier casino cassette cast castle cat
catalog cataract catastrophe category caterpillar cathedral catheter
cattle cause caution cave cavity ceiling celebration celebrity celery
cell cellar cement cemetery census cent center century ceremony
certificate certification chain chair chairman chalk challenge chamber
champion championship chance change channel chapel chapter character
characteristic charge charity chart charter chase chauffeur check
checklist checkpoint checkup cheek cheese chef chemical chemist
chemistry chemotherapy cheque cherry chess chest chicken chief childhood
chill chimney chin chip chocolate choice choir cholesterol chord chore
chorus chronicle chunk church cigarette cinema circle circuit
circulation circumstance circus citizen city civilian claim clamp clan
clarification clarity class classic classification classmate classroom
clause claw clay cleaner clearance clerk click client cliff climate
climb clinic clinician clip cloak clock closet closure cloth clot
cloud clown club clue cluster clutch coach coal coalition coast coat
cocktail coconut code coffee coil coin coincidence collaboration
collapse collar colleague collection collector college collision colon
colonel colony color colt column comb combat combination comedy comfort
comma command commander comment commentary commerce commission
commitment committee commodity community commuter companion company
comparison compartment compass compassion compensation competition
competitor complaint complement completion complex complexity compliance
complication compliment component composer composition compound
compression compromise computer concentration concept concern concert
conclusion concussion condition condo conduct conductor cone conference
confession confidence configuration confirmation conflict confusion
congestion congress conjunction connection conscience consciousness
consensus consent consequence conservation consideration consistency
console consolidation conspiracy constant constellation constipation
constitution constraint construction consultant consultation consumer
consumption contact container contamination contempt content contention
contest context continent contour contract contraction contractor
contradiction contrast contribution contributor control controller
controversy convenience convention conversation conversion convert
conviction cook cookie cooperation coordination coordinator cop cope
copper copy cord core cork corn corner cornea corporation corps corpse
correction correlation correspondence corridor cortex cosmetic cost
costume cottage cotton couch cough council counsel counselor count
counter country county couple coupon courage course court courtesy
courtyard cousin cover coverage cow crack cradle craft crane crash
crate crater cream crease creation creativity creature credential
credit creditor creek crest crew crib cricket crime criminal crisis
criterion critic criticism critique crop cross crossing crowd crown
crumb crust crutch cry crystal cube cucumber cue cuff cult cultivation
culture cup cupboard curb cure curiosity curl currency current
curriculum curtain curve cushion custard custody custom customer cut
cyanosis cycle cylinder cyst dad dairy dam damage dance dancer danger
dash data database date daughter dawn day deadline deal dealer dean
death debate debris debt debtor debut decade decay decision deck
declaration decline decompression decoration decrease dedication deed
deer default defeat defect defendant defense deficiency deficit
definition deformity degree dehydration delay delegate delegation
deletion deli delight delivery demand democracy demonstration denial
dentist department departure dependence deployment deposit depot
depression depth deputy dermatitis descent description desert design
designer desire desk dessert destination destruction detail detection
detective detector detention detergent determination development device
devotion diabetes diabetic diagnosis diagram dial dialogue dialysis
diameter diamond diaper diaphragm diarrhea diary dictionary diet
dietitian difference difficulty digestion dignity dilation dilemma
dimension dinner dinosaur dioxide dip diploma direction director
directory dirt disability disadvantage disagreement disappointment
disaster disc discectomy discharge discipline disclosure discomfort
discount discovery discrepancy discretion discrimination discussion
disease dish disk dislocation disorder display disposal dispute
disruption dissection distance distension distinction distraction
distress distribution distributor district ditch diver diversion
diversity dividend division divorce dizziness dock doctor doctrine
document documentation documentary dog doll dollar dolphin domain dome
donation donor door dosage dose dot doubt dough dove drain drainage
drama draw drawer drawing dream dress dresser drill drink drip drive
driver driveway drop drought drug drum dryer duck duct dumbbell dump
duodenum duration dust duty dwelling dye dysfunction dysphagia dyspnea
eagle ear earl earning earring earth earthquake ease east echo
echocardiogram economist economy edema edge edition editor editorial
education educator eel effect efficiency effort effusion egg ego
ejection elbow elder election electrician electricity electrode
electrolyte elephant elevation elevator eligibility elimination elite
email embarrassment emblem embolism embrace embryo emergency emission
emotion emperor emphasis empire employee employer employment enactment
encounter encouragement end endocarditis endometriosis endorsement
endoscope endoscopy endothelium endurance enemy energy enforcement
engagement engine engineer engineering enjoyment enlargement enrollment
ensemble enterprise entertainment enthusiasm entity entrance entry
envelope environment envy enzyme epidemic epidermis epilepsy episode
equation equilibrium equipment equity equivalent era erosion errand
error eruption escalator escape escort esophagus essay essence estate
estimate estimation ethanol ethic etiology evaluation evening event
eviction evidence evolution exam examination examiner example excavation
exception excerpt excess exchange excision excitement exclusion
excursion excuse execution executive exercise exhaust exhaustion exhibit
exhibition exile existence exit expansion expectation expedition
expense experience experiment expert expertise expiration explanation
exploration explosion explosive export exposure expression extension
extent exterior extraction extreme extremity eye eyebrow eyelid fabric
face facility fact faction factor factory faculty failure fair fairy
faith fall fame family fan fantasy farm farmer fascia fashion fat
fate father fatigue fault favor favorite fax fear feast feather feature
fee feedback feeling fellow fellowship femur fence fern ferry fertility
fertilizer festival fetus fever fiber fibrillation fibroid fiction
field fig fight fighter figure file filling film filter fin finance
finding fine finger fingernail finish fire firefighter fireplace
firework firm fish fisherman fist fistula fitness fix fixation fixture
flag flake flame flank flap flare flash flashlight flask flavor flaw
fleet flesh flexibility flexion flight flock flood floor flora florist
flour flow flower fluctuation fluid flush flute flutter fly foam focus
fog fold folder foliage folk follicle follower following food fool foot
football footprint force forearm forecast forehead foreigner foreman
forest forearm forgery fork form formation formula fort fortune forum
fossil foundation founder fountain fox fraction fracture fragment
fragrance frame franchise fraud freckle freedom freezer freight
frequency friction fridge friend friendship frog front frontier frost
frown fruit frustration fuel fulfillment function functionality fund
funding funeral fungus funnel fur furnace furniture fusion future
gadget gain gait galaxy gallbladder gallery gallon gallstone gambling
game gang gap garage garbage garden gardener garlic garment gas gasoline
gastritis gastroenterologist gate gateway gathering gauge gauze gaze
gear gel gender gene general generation generator generosity genetics
genius genre gentleman geography geometry gesture giant gift giraffe
girl girlfriend gland glance glass glaucoma glimpse globe glory glove
glucose glue goal goat goggle gold golf good goodbye goodness goodwill
goose gorilla gospel gossip government governor gown grace grade
gradient graduate graduation graft grain gram grammar grandchild
granddaughter grandfather grandmother grandson granite grant grape
graph grasp grass gratitude grave gravel gravity grease greenhouse
greeting grid grief grievance grill grip grocery groin groove gross
ground group grove growth guarantee guard guardian guess guest guidance
guide guideline guild guilt guitar gulf gum gun gut gutter guy gym
gymnast gynecologist habit habitat hair haircut half hall hallway halt
ham hammer hand handbook handle handful handout hang hanger harbor
hardship hardware harm harmony harness harp harvest hassle hat hatch
hate hatred haul hawk hay hazard head headache header headline
headquarters health hearing heart heartbeat heartburn hearth heat
heater heaven hedge heel height heir helicopter helmet help helper
hematoma hemorrhage hemorrhoid hen hepatitis herb herd hernia herniation
hero heroine hesitation hiccup hierarchy highway hike hiker hill hint
hip hippocampus hire historian history hobby hockey hold holder hole
holiday home homeland homework honey honor hood hoof hook hope horizon
hormone horn horse hose hospital hospitalist host hostage hostility
hotel hour house household householder housing hub hug hull human
humidity humor hunger hunt hunter hurdle hurricane husband hut hybrid
hydration hygiene hymn hypertension hypothesis hysterectomy ice iceberg
icon idea ideal identification identity ideology idiom idiot ignition
ignorance illness illusion illustration image imagination imbalance
imitation immigrant immunity immunization impact impairment impatience
implant implementation implication import importance imposition
impression imprisonment improvement impulse incentive inception inch
incidence incident incision inclusion income inconvenience increase
increment incubator independence index indication indicator indigestion
individual industry inequality infant infarction infection inference
infiltrate inflammation inflation influence influenza information
infrastructure infusion ingredient inhabitant inhalation inhaler
inheritance inhibitor initiative injection injury injustice ink inmate
inn innovation input inquiry insect insertion insight insomnia
inspection inspector inspiration installation instance instinct
institute institution instruction instructor instrument insulin
insurance intake integration integrity intellect intelligence intensity
intent intention interaction intercourse interest interface
interference interior intermission intern internist interpretation
interpreter interruption intersection interval intervention interview
intestine intolerance intuition invasion invention inventory investment
investigation investigator investor invitation invoice involvement
iron irony irrigation irritation ischemia island isolation issue item
itinerary jacket jail jam jar jaundice jaw jazz jealousy jeep jelly
jet jewel jeweler jewelry job jog joint joke journal journalism
journalist journey joy judge judgment juice jumper junction jungle
junior junk jurisdiction juror jury justice justification keyboard
kidney kilogram kilometer kind kindergarten kindness king kingdom kiosk
kiss kit kitchen kite kitten knee kneecap knife knight knob knock knot
knowledge lab label labor laboratory laborer lace ladder lady lake
lamb lamp land landing landlord landmark landscape lane language lantern
lap laparoscopy laptop larynx laser latitude laughter launch laundry
lavatory law lawn lawsuit lawyer layer layout laziness lead leader
leadership leaflet league leak lease leather lecture lecturer ledge
leg legacy legend legislation legislature legitimacy leisure lemon
length lens lentil leopard lesion lesson letter lettuce leukemia level
lever liability liaison liberty librarian library license lid lie
lieutenant life lifestyle lifetime lift ligament ligation light
lightning likelihood limb lime limit limitation limousine line lineage
linen liner lineup lining link lion lip lipid liquid list listener
listing liter literacy literature litigation litter liver livestock
load loaf loan lobby lobe lobster location lock locker locomotive
lodge loft log logic login logo longitude look loop loss lot lotion
lottery loudspeaker lounge love lover loyalty luck luggage lumbar lump
lunch luncheon lung luxury lymph lymphoma machine machinery magazine
magician magnet magnitude maid mail mailbox mainland maintenance major
majority malfunction malignancy mall malpractice mammal mammogram man
management manager mandate maneuver manifestation manifesto mankind
manner manor mansion mantle manual manufacturer manuscript map marathon
marble margin marina marker market marketing marketplace marrow
marriage marsh mask mass massage mast master mat match mate material
mathematician matrix matter mattress maximum mayor meadow meal meaning
measure measurement meat mechanic mechanism medal medalist media
mediastinum medication medicine meditation medium meeting melody melon
member membership membrane memo memoir memorial memory menace meniscus
mentor menu merchant mercy merger merit mesh mess message messenger
metabolism metal metaphor meter method methodology metric microphone
microscope microwave midnight midwife migraine migrant migration mile
mileage milestone milk mill millennium miner mineral minimum minister
ministry minority mint minute miracle mirror miscarriage misconduct
misery mishap mission missionary mist mistake mister mixture moat mob
mobility mode model modem moderator modification module moisture molar
mold mole molecule moment momentum monarch monastery money monitor monk
monkey monopoly monster month monument mood moon morale morality
morbidity morning mortality mortgage mosaic mosque mosquito moss motel
mother motion motivation motive motor motorcycle motorist motto mound
mount mountain mouse mouth move movement movie mucosa mud mug multitude
murmur muscle museum mushroom music musician mustache mutation myth
nail name nanny nap napkin narrative nation nature nausea navigation
navy neck necklace necrosis need needle negligence negotiation neighbor
neighborhood nephew nephrologist nerve nest net network neurologist
neuropathy news newsletter newspaper niche nickel nickname niece night
nightmare nipple nitrogen nod node nodule noise nomination nominee
noodle noon norm north nose nostril notebook notice notification notion
noun novel novelist novelty nucleus nuisance number nurse nursery nut
nutrient nutrition oak oar oasis oath oatmeal obesity obituary object
objection objective obligation observation observer obsession obstacle
obstetrician obstruction occasion occupation occupant occurrence ocean
octopus odds odor offense offer offering office officer official
offspring oil ointment olive omission oncologist oncology onion onset
opening opera operation operator ophthalmologist opinion opponent
opportunity opposition optician optimism optimist option orange orbit
orchard orchestra ordeal order ordinance organ organism organization
organizer orientation origin ornament orphan orthopedist oscillation
ounce outbreak outcome outfit outlet outline outlook output outrage
outsider oven overdose overlap oversight owl owner ownership oxide
oxygen pace pacemaker pack package packet pad paddle page pain paint
painter painting pair pajamas palace palate palm palpation palpitation
pamphlet pan pancreas pancreatitis panel panic pant pantry paper
parade paradigm paradox paragraph parallel paralysis paramedic parameter
parasite parcel pardon parent parenthesis parish park parking parliament
parlor parole parrot parsley part participant participation particle
partner partnership party passage passenger passion passport password
past pasta paste pastor pasture pat patch patella path pathologist
pathology pathway patience patient patio patriot patrol patron pattern
pause pavement pavilion paw payment payroll pea peace peach peak peanut
pear pearl peasant pebble pedal pedestrian pediatrician peer pen
penalty pencil pendant pendulum penicillin peninsula penny pension
pepper percent percentage perception perch perfection performance
performer perfume peril perimeter period permission permit persistence
person personality personnel perspective persuasion pest pet petal
petition pharmacist pharmacy pharynx phase pheasant philosopher
philosophy phlegm phobia phone photo photograph photographer phrase
physician physicist physics physiology pianist piano pick pickle
picnic picture pie piece pier pig pigeon pile pilgrim pill pillar
pillow pilot pin pinch pine pineapple pint pioneer pipe pipeline pirate
pistol piston pit pitch pitcher pity pixel pizza place placebo placement
placenta plague plain plaintiff plan plane planet plank planner plant
plantation planter plaque plasma plaster plastic plate plateau platelet
platform platter play player playground playwright plaza plea pleasure
pledge plenty pleura plight plot plug plumber plumbing plunge pneumonia
pocket pod podcast podium poem poet poetry point poison pole police
policeman policy polyp pond pony pool porch pore pork port porter
portfolio portion portrait pose position possession possibility post
postcard poster posture pot potato potential pottery pouch poultry
pound poverty powder power practice practitioner prairie praise prayer
precaution precedent precision predecessor prediction preference prefix
pregnancy premise premium preparation prescription presence present
presentation preservation president press pressure prestige presumption
pretext prevalence prevention preview prey price pride priest primary
prince princess principal principle print printer priority prison
prisoner privacy privilege prize probability probation probe problem
procedure proceeding process procession processor produce producer
product production productivity profession professional professor
profile profit prognosis program programmer progress progression
prohibition project projection projector prominence promise promotion
pronoun proof propaganda propeller property prophet proportion proposal
proposition proprietor prose prosecution prosecutor prospect prosperity
prostate prosthesis protection protein protest protocol prototype
provider province provision proximity proxy prudence psychiatrist
psychologist psychology pub publication publicity publisher pulse pump
pumpkin punch punctuation puncture punishment pupil puppet puppy
purchase purpose purse pursuit pus push puzzle pyramid quadrant quail
qualification quality quantity quarry quart quarter quartz queen query
quest question questionnaire queue quilt quota quotation quote rabbit
race racism rack radar radiation radiator radio radiologist radiology
radish raft rag rage raid rail railing railroad railway rain rainbow
raincoat raise rake rally ranch range ranger rank ransom rash rat rate
ratio ration rationale raven ray razor reaction reader reading
readiness realist reality realm reason reasoning rebate rebel rebellion
recall receipt receiver reception receptionist receptor recess recession
recipe recipient recital recognition recommendation record recorder
recording recovery recreation recruit recruitment rectangle rectum
recurrence reduction redundancy reed reef referee reference referral
refinery reflection reflex reform refrigerator refuge refugee refund
refusal regard regime regimen region register registration registry
regret regulation regulator rehab rehabilitation rehearsal reign
reimbursement rein rejection relation relationship relative relaxation
relay release relevance reliability relief religion relocation remark
remedy reminder remission remnant removal renaissance renovation rent
rental repair repetition replacement replica reply report reporter
repository representation representative reputation request requirement
rescue research researcher resection resemblance reservation reservoir
residence resident residue resignation resilience resistance resolution
resort resource respect respiration respondent response responsibility
rest restaurant restoration restraint restriction result resume
retailer retention retina retirement retreat return reunion revelation
revenge revenue reversal review revision revival revolution reward
rhetoric rheumatologist rhythm rib ribbon rice riddle ride rider ridge
rifle right rim ring rinse riot rise risk ritual rival river road
roar roast robbery robe robin robot rock rocket rod role roll roller
romance roof room root rope rose roster rotation route router routine
row rubber rug ruin rule ruler rumor runner runway rupture rush sack
sacrifice saddle safety saga sage sail sailor saint salad salary sale
salesman salmon salon salt salute salvage sample sanction sanctuary
sand sandal sandwich sanity sap sarcasm satellite satisfaction sauce
saucer sausage savage saving savior saw scaffold scale scalp scalpel
scan scandal scanner scar scarcity scare scarf scenario scene scenery
scent schedule schema scheme scholar scholarship school science
scientist scissors scoop scope score scorn scout scratch scream screen
screening screw script scroll sculptor sculpture sea seal seam search
season seat secret secretary section sector security sedan sedation
sediment seed segment seizure selection self semester seminar senate
senator sensation sense sensitivity sensor sentence sentiment
separation sequence sergeant series sermon servant server service
session set setting settlement settler setup sewage shade shadow shaft
shame shampoo shape share shareholder shark shed sheep sheet shelf
shell shelter shepherd sheriff shield shift shin shine ship shipment
shirt shock shoe shooting shop shopper shore short shortage shortness
shot shoulder shout shovel show shower shrimp shrine shrub shuttle
sibling sickness side sidewalk siege sigh sight sign signal signature
significance silence silk silver similarity simulation sin singer sink
sinus sip sir siren sister site situation size skeleton sketch ski
skill skin skirt skull sky slab slack slate sled sleeve slice slide
slogan slope slot sloth smile smoke smoker snack snake sneaker snow
soap soccer society sociology sock socket sofa softness software soil
soldier sole solicitor solidarity solo solution solvent son song soprano
sorrow sort soul sound soup source south souvenir sovereignty space
spacecraft span spark sparrow spasm spatula speaker spear specialist
specialty species specification specimen spectacle spectator spectrum
speculation speech speed spell spelling sphere spice spider spike
spinach spine spiral spirit spite spleen splendor splint split spokesman
sponge sponsor sponsorship spoon sport spot spouse sprain spray spread
spring sprinkle sprout spur spurt squad square squash squirrel stability
stack stadium staff stage stain stair staircase stake stalk stall
stamina stamp stance standard standing standpoint stanza staple star
starch stare start starter state statement station statistic statue
stature status statute steak steam steel stem stent step stereotype
sternum steroid stew steward stick stigma stimulus sting stipend stitch
stock stocking stomach stone stool stop storage store storm story
stove strain strand stranger strap strategy straw strawberry stream
street strength stress stretch stretcher stride strife strike string
strip stripe stroke stroll structure struggle stub student studio
study stuff stump style stylist subdivision subject submission
subscriber subscription subsidiary subsidy substance substitute
substitution suburb subway success succession successor sucker suction
suffix sugar suggestion suicide suit suitcase suite sum summary summer
summit summons sun sunrise sunset supervision supervisor supper
supplement supplier supply support supporter suppression surface
surgeon surgery surplus surprise surveillance survey survival survivor
suspect suspension suspicion suture swab swan sweat sweater swelling
swing switch sword syllable symbol symmetry sympathy symphony symptom
syndrome synergy syntax syringe syrup system tab table tablespoon
tablet taboo tackle tactic tag tail tailor talent tale talk tank tap
tape target tariff task taste tavern tax taxi taxpayer tea teacher
teaching team teamwork tear teaspoon technician technique technology
teen teenager telegram telephone telescope television teller temper
temperature temple tempo temptation tenant tendency tendon tendonitis
tennis tenor tension tent tenure term terminal termination terrace
terrain territory terror test testament testimony text textbook
texture theater theft theme theology theory therapy thermometer thesis
thief thigh thing thinker thirst thorn thread threat threshold thrill
throat thrombosis throne throng throttle thumb thunder ticket tide tie
tiger tile tilt timber time timeline timer tin tip tissue title toad
toast tobacco toe toilet token tolerance toll tomato tomb tone tongue
tonsil tonsillectomy tool tooth top topic torch tornado torso tortoise
torture total touch tour tourist tournament towel tower town toxin toy
trace tracheostomy track tract tractor trade trader tradition traffic
tragedy trail trailer train trainee trainer training trait traitor
tram transaction transcript transcription transfer transformation
transfusion transit transition translation translator transmission
transparency transplant transport transportation trap trash trauma
travel traveler tray treadmill treason treasure treasurer treasury
treat treatment treaty tree trek tremor trench trend trial triangle
tribe tribunal tribute trick trigger trim trio trip triumph trolley
troop trophy trouble trousers trout truce truck trumpet trunk trust
trustee truth tube tuberculosis tuition tumor tune tunnel turbine
turkey turn turnout turnover turtle tutor twig twin twist type typhoon
tyranny ulcer umbrella uncle underdog undergraduate understanding
undertaking underwear unemployment uniform union unit unity universe
university upbringing update upgrade upheaval uprising upset urethra
urgency urine urologist usage use user usher utensil uterus utility
utterance vacancy vacation vaccination vaccine vacuum vagina valley
value valve van vandalism vanilla variable variance variant variation
variety varnish vase vault vegetable vegetation vehicle veil vein
velocity velvet vendor veneer vengeance venture venue veranda verb
verdict verification verse version vertebra vessel vest veteran
veterinarian veto vibration vice vicinity victim victory video view
viewer viewpoint vigil villa village villager vine vinegar vineyard
violation violence violet violin virtue virus visa viscosity vision
visit visitor vista vitamin vocabulary voice void volcano volume
volunteer vomiting vote voter voucher vow voyage wage wagon waist wait
waiter waitress wake walk walker wall wallet walnut war ward warden
wardrobe warehouse warmth warning warrant warranty warrior wart wash
washer wasp waste watch water waterfall wave wax way weakness wealth
weapon wear weather weaver web website wedding wedge week weekend
weight welcome welder welfare well west whale wheat wheel wheelchair
wheeze whim whisper whistle wholesaler widow widower width wife wig
will willow win wind window windshield wine wing winner winter wire
wisdom wish wit witch withdrawal witness wizard wolf woman wonder wood
wool word work worker workforce workout workshop world worm worry
worship worth wound wrap wreath wreck wrench wrestler wrinkle wrist
writer writing yacht yard yarn yawn year yeast yield yogurt youngster
youth zeal zebra zone zoo
abductor abutment acetabulum adduction adductor adenocarcinoma
adenoma adenopathy adhesive adjuvant adrenaline aerosol airline
airport alcoholic alga alignment alkali allocation almanac
alteration altercation ambassador amble ambulation amputee
analgesic analogue anastomosis anatomy anchorage android anesthetist
aneurysmectomy angiography ankylosis announcer annuity anomaly
antagonist anthropologist antidepressant antidote anvil aorta
apartheid aphasia apparition appendage applesauce apprenticeship approximation aquarium arbitration arc arcade
archaeologist archer archipelago areola arrhythmia arteriogram
arteriosclerosis arthroplasty arthroscopy articulation ascites
assailant assay asterisk asteroid astronomer asymmetry atheroma
atherosclerosis athletics atrium auditorium augmentation
auscultation autograph automaker automation automobile autonomy
avulsion axilla axon babble backbone backlog badger bailiff
balcony ballad ballerina ballet bandit banjo baptism barb barcode
bard barge baritone barometer baron barracks barrister bartender
basil basilica bassoon bat batch bathtub baton battalion
battlefield bazaar beacon beaker beast bedside bedtime beehive
belief bellhop bellow benchmark bequest bezel bibliography bicep
bifurcation bigotry bikini bilirubin billion binary binge
biochemistry biographer biography biologist biology biome biopsy
biosphere biotechnology birch bishop bison bladder blemish
blockade blockage blot bluff boar boardroom bodyguard bog
boiler bolus bonnet bookcase bookkeeper bookmark bookstore
borough botanist botany bottleneck bougie bouillon boulevard
bounce bounty bowler boxer boxcar boycott brachytherapy braid
braille brainstorm bran brandy brass brassiere bravado brawl
breadth breakdown breakthrough breakup brewery bribe bribery
bridle briefing brigadier brilliance brine briquette bristle
broadcast broadcaster brocade bronchiolitis bronchitis
bronchoscope bronchoscopy bronze brooch brood broth brotherhood
brunch brunt bruise buccaneer buffalo buffet buggy bugle bulldozer
bullhorn bullion bully bulwark bumper bungalow bunk bunker buoy
buoyancy bureaucracy bureaucrat burlap bursitis busboy bustle
butane butte buttock buttress byte cab cadaver caddy cadence cadet
cafeteria calamity calcification calcium calibration caliper
calligraphy callus calamine cameo camper campfire campground
camshaft canister canker cannon cannulation canon cantaloupe canteen
canter capillary capitalism capitalist capitol caravan carbine
carbohydrate carcass carcinoma cardiomyopathy cardroom caregiver
caretaker caricature carat carotid carousel carpus cartel cartilage
casket casserole cassette castaway caste castigation catalyst
catapult catastrophe catechism caterer catfish cathedral catheterization
catwalk caucus cauldron cauliflower causeway cauterization caution
cavalry caveat cavern cedar celebration cellist cello cellophane
cellulitis cellulose censor censorship centerpiece centimeter
centrifuge ceramic cereal cerebellum cerebrum certainty certitude
cesarean chagrin chainsaw chalet chalkboard champagne chancellor
chandelier chaos chaperone chaplain charcoal chariot charisma
charm chassis chastity chateau chatter chauffeur checkbook
checkerboard cheekbone cheetah chef chemo chessboard chestnut
chick chickenpox chieftain chime chimpanzee chiropractor chisel
chivalry chlorine chokehold cholangiogram cholecystectomy
cholecystitis chow chowder christening chromosome chronology
chuckle churn chute cider cigar cilantro cinder circumcision
circumference cirrhosis citadel citation citrus clairvoyance
clambake clamor clapboard clarinet classics claudication clavicle
cleaner cleanliness cleat clemency clergy clergyman cleric clerkship
clientele clinch clique cloakroom clockwork clod clogging cloister
clone closeness clot cloudburst clove clubhouse clump coagulation
coalition cobbler cobra cobweb cocaine cockpit cockroach cocoa
codicil coexistence cognition cognizance cohort coincidence colander
colectomy colic coliseum colitis collagen collarbone collateral
collie collision colloquium collusion cologne colonoscopy
colonization colonizer colossus columnist coma combustion comedian
comet comfort commandant commando commemoration commencement
commendation commentator commissioner commonwealth
commotion commune communion communique communism communist commuter
compendium competence complexion composure comprehension compressor
comptroller compulsion computation computing concealment conceit
concentrate conception concerto concession concierge conciliation
conclave concoction concourse concrete concurrence condensation
condiment condolence condominium condor conduit confection
confederacy confederation conferment confetti confidant confidante
confinement confiscation conflagration confluence conformity
congregation congressman conjecture conjunctivitis connoisseur
connotation conquest conscript consecration conservatory consignment
consolation consonant consortium conspirator constable constituency
constituent constriction consulate contagion contemplation
contentment continuation continuity contraband contraception
contraceptive contraindication contralto contraption contrition
contrivance convalescence convection convent convergence converse
conveyance conveyor convict convoy convulsion cookbook cookware
coolant cooler coot copier copilot copyright coral
cordon corduroy cornerstone cornice cornmeal coronary coroner
corporal corpuscle corral correlate corrosion corsage corset cortisone
cosmonaut cosmos costochondritis cot cottonwood cougar councilman
countdown countenance counterattack counterfeit counterpart
countertop countryman countryside coup coupe courier courthouse
courtroom courtship cove coven covenant coverlet coyote crab
crackdown cracker craftsman craftsmanship cranberry craniotomy
cranium crank crankshaft crawlspace crayon creamery crease credo
creek cremation crematorium creosote crepe crescendo
crescent cress crevice crewman cribbage crock crocodile crocus
croissant crook crooner crosswalk crossword crouch crouton crow
crowbar crucible crucifix crucifixion cruelty cruiser crumble
crusade crusader crustacean cryotherapy crypt cub cubicle cuddle
cudgel cuisine culmination culprit culvert cumin cupcake curator
curfew curio curvature cusp cuspid custodian customs cutback
cuticle cutlery cutoff cyclist cyclone cypress cystectomy cystitis
cystoscopy cytology czar dachshund daffodil dagger dahlia daisy
dale dalliance damsel dandelion dandruff daredevil darkroom
darling dart dashboard datum daybreak daycare daydream daylight
deacon deactivation deadlock deafness dearth deathbed debacle
debilitation debridement debugger decadence decanter decathlon
deceleration decency decibel deciduous decimal decipherment
declension declination decoder decompensation decongestant decor
decorator decorum decoy decree decubitus deduction deference
defiance defibrillator deficiencies definiteness deflation
deformation defroster deftness degeneration degenerate dehiscence
deity dejection delicacy delicatessen delirium deltoid demeanor
dementia demise demitasse demolition demon
demonstrator demotion denim denomination denominator denouement
density dent denture deodorant departure dependability dependent
depiction depletion deportation deportment deposition depositor
depravity depreciation depressant deprivation derby derelict
dermatologist dermatology derrick dervish descendant desecration
desegregation desperation despot dessert destiny destroyer
detachment detainee detonation detonator detour detriment deviation
devotee dew dexterity diabetes diagnostics dialect diastole
dichotomy dictation dictator diction dictum diesel dietician
differential diffusion digit digitalis dignitary digression dike
dilatation diligence dill dilution dime dimple diner dinghy
dinnerware diocese diorama dioxide diphtheria diploma diplomacy
diplomat dipstick directive directness directorate dirge
disarmament disarray disbelief discectomy discernment disciple
disciplinarian discoloration discontent discord discourse
discoverer discus disdain disenchantment disgrace disguise disgust
dishwasher disinfectant dislike dismay disobedience disparity
dispatch dispatcher dispensary dispersal displacement displeasure
disposition disproportion disquiet dissent dissertation dissidence
dissident dissipation dissonance distaste distillery distortion
distributor disuse diuretic diva divan divergence diverticulitis
diverticulosis dividend divinity divisor docket dockyard doctorate
dogma dogwood doily dollop dolly dominance domination
dominion domino donkey doodle doom doorbell doorknob doorman
doormat doorstep doorway dormancy dormitory dosimetry dossier
dotage doubloon dowager dowel downfall downpour downside downtown
downturn dowry draftsman dragnet dragon dragonfly drainpipe drape
drapery drawbridge dread dreamer dredge dresser dribble drifter
driftwood drizzle dromedary drone drool droplet dropout dropper
drudgery drugstore druid drumstick drunkard dryness dubbing
duchess duckling duel duet duffel dugout duke dullness dumbbell
dumpling dumpster dune dungeon duodenitis duplex duplication
durability duress dusk dustpan duvet dwarf dweller dynamo dynasty
dysentery dyskinesia dyslexia dysplasia dysrhythmia dystrophy
earlobe earphone earpiece earplug easel eatery eater eaves
ecologist ecology economics ecosystem eczema editorialist educator
eglet ejaculation elasticity elation elbow elective electorate
electrocardiogram electroencephalogram electromagnet electron
elegance elegy element elevation elf elimination elixir elk elm
elongation eloquence embankment embargo embarkation embellishment
ember embezzlement embodiment embolization embroidery emcee emerald
emergence emigrant eminence emissary emollient emporium emulsion
enactment enamel encampment encephalopathy enchantment enclave
enclosure encore encyclopedia endeavor ending endocrinologist
endorsement endowment endpoint enema enforcement engraving engineer
enigma enjoyment enlistment enmity ennui enormity ensign entourage
entrant entrapment entree entrepreneur enumeration enunciation
envoy eon epicenter epidemiologist epidermis epigastrium epiglottis
epilogue epiphany epithelium epitome epoch equator equinox
equivalence eradication erection ergonomics errand erythema
escapade escarpment esophagitis espionage espresso esprit essayist
essential establishment esteem esthetician estrangement estrogen
estuary etching eternity ether ethos etiquette eucalyptus eulogy
euphemism euphoria evacuee evaluator evangelist evaporation
eventuality everglade evergreen eviction evacuation exaggeration
exaltation exasperation excavator excellence excision exclamation
excursion executioner executor exemption exertion exhalation
exhilaration exodus exoneration exorcism exoskeleton expanse
expatriate expediency expedience expenditure explorer explosion
exponent expressway expulsion extinction extinguisher extortion
extrication extrovert exuberance eyeball eyeglass eyelash eyeliner
eyesight eyewitness fable fabrication facade facet facilitator
facsimile faction fad fairground fairness fairway falcon fallacy
fallout fanatic fanfare fang fantasy farce farewell farmhouse
farmland fascination fastener fatality fathom faucet fauna fawn
fearlessness feasibility feat federation feline femininity feminist
fenestration ferment fern ferocity fertilization fervor fetish
feud feudalism fiance fiasco fiat fibrosis fiddle fidelity fiefdom
fieldwork fiend fiesta filament filibuster filtration finale
financier finesse finery finger fingertip finish firearm fireball
firebrand firefly firewood fiscal fissure fixative flagship
flagstone flair flamingo flannel flapjack flashback flatulence
flattery fledgling flextime flicker flier flint flintlock flipper
flirtation floodlight floorboard florin flotilla flounder flourish
fluke fluoride flurry fluoroscopy foal foam fodder foe fondness
foothill foothold footnote footpath footstep footwear forage foray
forbearance forceps forefather forefinger forefront foreground
foreigner foreleg forelock foreperson foresight forestry forethought
forfeiture forgiveness formality formalin format fornix forsythia
forthrightness fortification fortitude fortnight fortress forage
fowl foxhole foyer fraction fragility frailty framework franc
fraternity freckle freelancer freeway freighter frenzy frequency
fresco freshman freshness friar frigate fringe frisbee fritter
frivolity frond frontage frontrunner frostbite froth frugality
fruition fudge fugitive fulcrum fullness fumble fume fumigation
functionary fundamentalist fundus funnel furlough furrow fuselage
fussiness futility gable gadfly gaffe gag gaggle gaiety gala
galley gallows gambit gander gangrene gangway gantry
garb garland garner garnish garrison gasket gastrectomy gastroscopy
gatekeeper gateway gaiter gazebo gazelle gearbox gecko geisha
gelatin gemstone gendarme genealogy generalist generalization
generality genesis geneticist geniality genitalia genome gentry
geologist geology geranium gerbil geriatrician germ germination
gerontology gestation geyser gherkin ghetto ghost ghoul gig
gimmick gin ginger gingivitis ginseng giraffe girder girth gist
glacier gladiator glamour glaucoma glazier gleam glee glen glider
glimmer glint glitch glitter gloom glossary glossiness glut
glutton gluttony glycerin gnat gnome goalie goblet goblin godfather
godmother godsend goiter goldfish gondola gong gonorrhea goodness
gopher gorge gosling gourd gourmet gout governance governess
grabber gracefulness graciousness gradation grader graffito
grandeur grandparent grandstand granola granule grapefruit
grapevine graphite grappler gratification grating gratuity
gravestone graveyard gravy grazer greed greenery grenade greyhound
griddle gridlock grille grimace grinder gristle grit grocer
grotto grouch grouse grout grove growl grub grudge gruel guerrilla
guffaw guild guile guillotine gull gullet gulley gulp gumbo
gumption gunfire gunman gunnery gunpowder gurney guru gusto
gymnasium gynecology gypsum gyration habitation hacksaw haddock
hailstorm hairline hairpin halibut hallmark hallucination halo
halter hamlet hammock hamper hamstring handbag handball handbook
handcuff handgun handicap handkerchief handlebar handler handrail
handshake handyman hangar hanger hangover hankering hansom
haphazardness harangue harasser harassment harbinger hardcover
hardiness hardwood harlequin harmonica harpoon harpsichord
harridan harrow hart hashish hassock hatchback hatchery hatchet
hauler haunch haven havoc hawker hawthorn haystack hazelnut
haziness headband headboard headdress headgear headlamp headlight
headmaster headphone headrest headroom headset headstone headway
hearse heartache heartland heater heath heathen heatstroke heave
hedgehog heed heft hegemony heifer heirloom heist helicopter helium
helm helmsman helper hemangioma hematologist hematuria hemline
hemlock hemoglobin hemophilia hemoptysis hemostasis hemostat
henchman hepatologist herald herbalist herbicide heretic heritage
hermit herniorrhaphy heroin heroism herring hesitancy heyday hiatus
hibernation hibiscus hideaway hideout hierarchy hieroglyph
hilarity hillside hilltop hindrance hindsight hinge hint hinterland
hipbone hippie hippopotamus histogram histology historian hoarder
hoarseness hoax hobbyist hobo hog hoist holdup hollow holly
hologram holster homage hombre homeland homemaker homeopathy
homeowner homestead homicide homily hominy homograft honeycomb
honeymoon honeysuckle honoree hoodlum hooligan hoopla hootenanny
hopefulness hopscotch horde horizon hornet horoscope horsepower
horseradish horticulture hosiery hospice hospitality hostel hostess
hotbed hothead hound hourglass houseboat housefly houseguest
housekeeper housewife hovel hovercraft hubbub hubcap huckster
huddle hue huff hulk humanist humanity humankind humerus humidifier
humiliation hummingbird hummus humpback hunch hunk huntress hurrah
husbandry husk huskiness hustler hutch hyacinth hybridization
hydrant hydraulics hydrocele hydrocephalus hydrogen hydrotherapy
hyena hygienist hymnal hyperplasia hypertrophy hyphen hypnosis
hypnotist hypochondria hypocrisy hypocrite hypotension hypothermia
hysteria iceberg icicle icing ideal idealism identifier ideologue
idiocy idiosyncrasy idleness idol idolatry igloo ignition ignominy
iguana ileostomy ileum ilium illiteracy illumination imagery
imbecile imitation immensity immersion immigration imminence
immobilization immunodeficiency immunologist impaction impasse
impatiens impediment imperative imperfection imperialism impetus
implausibility implement importer imposition impostor impotence
impoundment imprecision impresario imprint improvisation impurity
inaccuracy inaction inadequacy inauguration incandescence incubation
incarceration incense incentive inception incinerator incisor
inclination inclusion incompetence incongruity incontinence
incorporation incredulity incrimination incubus incumbent indecision
indemnity indentation indifference indigestion indignation indigo
indiscretion individualist indoctrination inducement induction
industrialist ineptitude inertia inevitability inexperience infamy
infantry infarct infatuation inference infidelity infielder
infiltration infirmary infirmity influx informant informer
infraction infrared ingenuity ingot ingrate ingredient inhabitant
inhibition initiation initiator injunction injustice inkling
inlay inlet innkeeper innocence innovation innuendo inoculation
inpatient inquest inquisition inroad insanity inscription
insecticide insecurity insignia insinuation insistence insolence
insolvency inspiration installment instep instigator institution
insubordination insufficiency insulator insult insurgency insurgent
insurrection intactness intangible integer intellectual
intelligentsia intemperance intercession interchange intercom
interconnection interdependence interferon interim interlock
interloper interlude intermediary intermission internship
interplay interrogation interrogator interstate interstice
intestine intimacy intimation intimidation intonation intoxication
intransigence intrigue introvert intruder intrusion intubation
intuition inundation invalid invective inventor inversion
invertebrate investiture invincibility invocation iodine iota
irascibility iris ironwork irreverence irrigation islet isotope
itinerary ivory jackal jackass jackpot jade jaguar jailer jalopy
jamboree janitor jargon jasmine jasper javelin jawbone jaywalker
jealousy jeep jello jerky jest jester jetliner jetty jigsaw
jingle jinx jitter jockey jogger jointure joist joker jolt jostle
jot joule journeyman joust jovialness jowl jubilee judiciary jug
juggernaut juggler jugular juke jumble jumper jumpsuit junction
juncture junkie junta jurist jurisprudence juxtaposition kaleidoscope
kangaroo karate kayak keel keepsake keg kelp kennel kerchief kernel
kerosene kestrel ketchup kettle keyhole keynote keypad keystone
khaki kickback kickoff kidnapper kidnapping kiln kilt kimono kin
kinase kindling kindred kinetics kingfisher kingpin kinship kiosk
kitchenette kiwi kleptomania knack knapsack knave knead kneecap
knell knickknack knighthood knoll knuckle koala kudos
kyphosis label labyrinth laceration lackey lacquer lactation lad
ladle ladybug lagoon lair laity lamb lament lamentation laminate
laminectomy lamppost lance lancet landfill landholder landmine
landowner landslide lapel lapse larceny larch lard largess lariat
lark larynx lasagna lash lasso latch latency lathe lather latitude
latrine latte lattice laureate laurel lava lavender lawmaker
lawnmower laxative layman layoff layover lagoon leach leaflet
leakage leanness leapfrog learner leash ledger leech leeway
legality legation legibility legion legislator legitimacy legume
lemonade lemur lentil leotard leprosy lesion lethargy letterhead
lettering leukocyte levee lever leverage levity lexicon liability
libel liberal liberation libertarian libido librettist lichen
lifeblood lifeboat lifeguard lifeline lifespan ligament ligature
lighthouse lightbulb likeness lilac lily limb limber limestone
limelight limerick limousine limpness linchpin lineage lineament
linebacker lineman lineup linguist liniment linkage linoleum lint
lintel lioness lipoma liposuction liqueur liquidation liquor lisp
listlessness litany literate lithograph litigant litmus liturgy
livelihood liveliness livery lizard llama loafer loam loathing
lobbyist lobectomy locale locality lockdown locket lockout
locksmith locomotion locus locust lodestone lodging loft loftiness
logbook loggerhead logician loin loiterer lollipop loneliness
longevity longhand longing lookout loom loon loophole lordosis
lore lorry lotus loudness lounge louse louver lovebird loveliness
lowland lozenge lubricant lucidity luggage lull lullaby lumberjack
lumberyard luminary luminosity lumpectomy lunacy lunatic luncheon
lunge lurch lure luster lute luxuriance lyceum lymphadenopathy
lymphocyte lynx lyric lyricist macaroni macaw mace machete
machination machinist mackerel madam madman madness madrigal
maelstrom maestro magistrate magnate magnesium magneto magnolia
magpie maharajah mahogany maiden mailer mailman mainframe mainstay
mainstream majesty majority malady malaise malaria malcontent
malformation malice mallard mallet malnutrition malocclusion
mandible mandolin mane manganese mangrove manhole manhood manhunt
manicure manifold mannequin mannerism manometer manpower mantel
mantra manure mapmaker maple marauder marble margarine marigold
marijuana marinade mariner marionette marksman marmalade maroon
marquee marquis marrow marshal marshmallow marsupial martin
martyr martyrdom marvel mascara mascot masochist masonry
masquerade massacre masseur mast mastectomy mastermind masterpiece
mastery mastiff mastoid matador matchbook matchmaker materialism
maternity mathematician matinee matriarch matricide matrimony
matron maturation maturity maverick mayhem mayonnaise mayoralty
maze meadowlark meagerness meanness meantime measles meatball
meatloaf mechanization medallion meddler mediator medic
medicament mediocrity meditation medley meekness megaphone
melancholy melanoma mellowness melodrama meltdown membrane memento
menagerie mendicant meningitis menopause menorah mentality
mentorship mercenary merchandise merchantman mermaid merriment
mesentery mesh mesmerism messiah metabolite metallurgy
metamorphosis meteor meteorite meteorologist meteorology methane
methodology meticulousness metronome metropolis mettle mezzanine
microbe microbiology microcosm micrometer microorganism microscopy
midday midfield midland midpoint midriff midst midsummer midterm
midwifery mien mightiness mileage milestone militancy militia
milkshake millennium miller millet milligram milliliter millimeter
milliner millionaire millstone mimic mimicry minaret mincemeat
mindfulness mindset minefield mineralogy minesweeper mingling
miniature minibus minicomputer minimalist minion miniskirt
minnow minstrel minuet minutia mirage mirth misadventure
misalignment misanthrope misapprehension misbehavior miscalculation
miscellany mischief misconception miscreant misdeed misdemeanor
miser misfit misfortune misgiving mishmash misinterpretation
misnomer misogynist misprint misrepresentation missile mistletoe
mistress mistrust mite mitigation mitten mixer mnemonic moat
mobilization moccasin mockery mockingbird modeling moderation
modernity modesty modicum modification modulation mogul molasses
molestation mollusk molt momentum monastery monetarist moniker
monogamy monogram monolith monologue mononucleosis monoplane
monorail monotony monsoon montage moonbeam moonlight moonshine
moped moraine morale morass moratorium morbidity mores morgue
morphine morsel mortality mortar mortician mortification mosaic
motif motocross motorcade motorcyclist motorway mousetrap
mouthful mouthpiece mouthwash movable mover mower mucus mudslide
muffin muffler mug mugger mulberry mulch mule mullet multiplication
multiplicity multitude mumps municipality mural murkiness
muscularity musculature mushiness musicale musicianship musk
musket musketeer muskrat muslin mussel mustang mustard muster
mutability mutilation mutineer mutiny mutt mutuality muzzle myalgia
myocardium myopathy myopia myriad myrtle mysticism mystique
mythology nadir nag naivete nameplate namesake nanosecond naphtha
napalm nape narcissism narcissist narcotic narration narrator
nastiness nationalism nationalist nationality naturalism
naturalist naughtiness nave navel navigator nearness nebula
necessity neckline necktie nectar nectarine needlepoint
needlework negation negative negligee negotiator neigh
neighborliness nemesis neologism neonate neoplasm nepotism nerd
nervousness nest nestling netting nettle neurologist neuron
neurosurgeon neutrality neutron newcomer newlywed newsman
newsprint newsreel newsstand nexus nibble nicety nichrome nickel
nicotine nightcap nightclub nightfall nightgown nightingale
nightstand nihilism nimbleness nincompoop nirvana nitrate niter
nobility nobleman nocturne noggin nomad nomenclature nominee
nonchalance nonconformist nonentity nonsense noodle nook noose
normalcy nostalgia notable notation notch notebook notoriety
nougat nourishment novella novice novocaine nozzle nuance nugget
nuisance nullification numbness numeral numerator nunnery nuptial
nursemaid nutcracker nuthatch nutmeg nutritionist nylon nymph
oarsman obedience obelisk obituary objectivity objector oblivion
obscenity obscurity observance observatory obstetrics obstinacy
occlusion occultism occupancy oceanographer oceanography ocelot
octagon octave ode odometer odyssey offender offense offertory
officialdom offshoot offspring ogre ohm oilcloth okra oldster
oleander olfaction oligarchy omelet omen ominousness omnibus
omnipotence oncoming onlooker onslaught oomph opacity opal
openness operetta ophthalmology opiate opportunist optimum
opulence oracle oration orator oratory orchid ordination ore
organist orgy orifice ornamentation ornithologist orphanage
orthodontist orthodoxy orthopedics oscillation osprey ossification
ostentation osteoarthritis osteomyelitis osteopath osteoporosis
ostracism ostrich otolaryngologist otter ottoman outage outback
outboard outburst outcast outcrop outcry outdoorsman outerwear
outfielder outfitter outgrowth outhouse outlay outlier
outpatient outpost outpouring outset outsider
oval ovary ovation overcoat overcrowding overflow overgrowth
overhang overhaul overhead overload overpass overproduction
overseer overshoe oversimplification overstatement overture
ovulation oxcart oxidation oyster ozone pacemaker pachyderm
pacifier pacifism pacifist paddock padlock pagan pageant
pageantry pagoda pailful painkiller painstaking palatability
palate palaver paleness palette palisade palladium pallbearer
pallet pallor palpitation palsy pamphlet panacea pancake pancreas
panda pandemic pandemonium panelist pang panhandle panorama
pansy pantheon panther pantomime pantry papaya papacy paperback
paperweight paperwork paprika papyrus parable parabola parachute
parachutist paradigm parakeet paralegal parallax paralytic
paramedic paranoia parapet paraphernalia paraplegia parasol
paratrooper parchment pardon parentage parenthood parfait pariah
parishioner parity parka parlance parliamentarian parlor parody
parole parolee paroxysm parquet parsec parsnip parson parsonage
partridge parturition passageway passerby passivity pastiche
pastime pastry pasture patchwork pate patentee paternity pathogen
pathos patina patriarch patrician patricide patrimony patriot
patriotism patrolman patronage patter paucity pauper pawn
pawnbroker payee payload paymaster payoff peacefulness peacock
peahen pecan peccary pectoral peculiarity pedagogue pedagogy
pedant pedestal pediatrics pedicure pedigree peddler peephole
peerage pelican pellet pelt penance penchant pendant penguin
penitence penitentiary penknife penmanship pennant penology
pentagon penthouse penury peon peony perambulator percolator
percussion perdition peregrination perennial perfectionist
perforation perfusion pergola perihelion peril periodical
periodontist peritoneum peritonitis periwinkle perjury
permanence permeability permutation perniciousness peroxide
perpendicular perpetrator perpetuity perplexity persecution
perseverance persimmon persona personage personification
perspicacity perspiration pertinence perturbation perusal
pessimism pessimist pestilence pestle petticoat pettiness
petulance pew pewter phantom pharaoh pharmaceutical pharmacology
pheasant phenobarbital philanthropist philanthropy philharmonic
philodendron phlebitis phlebotomy phoenix phonics phonograph
phosphate phosphorus photocopier photogenicity photon phrasing
phylum physique pianissimo picket pickup pictograph pidgin
piecework piedmont pigment pigmentation pigpen pigtail pike
pilaf pilgrimage piling pillage pincer pinewood pinion pinkeye
pinnacle pinpoint pinstripe pioneer piety pipette piracy pirouette
pistachio pitchfork pitfall pithiness pittance pivot placard
placement plagiarism plaintiff plait planetarium plank plankton
planner plantain planter plateful platinum platitude platoon
plaudit playback playhouse playmate playoff plaything plaza
pleasantry plebiscite plectrum plenitude plethora pliability
plight plowman plum plumage plume plunder plunger plurality
plywood pneumonectomy poacher pocketbook podiatrist
poignancy poinsettia pointer poise polarity polecat polemic
policyholder polio polish politburo politeness politician polka
pollen pollination pollster polygraph polymer polyphony pomegranate
pomp pomposity poncho ponytail poodle popcorn poplar poppy populace
popularity population porcelain porcupine porridge portal
portent portfolio portico portrayal positivism posse possum
posterity postgraduate postman postmark postmaster postmortem
postponement postulate potency potentate pothole potion potpourri
pottage potter poultice pout powerhouse powerlessness pox
practicality pragmatism praline prank prankster prattle preacher
preamble precedence precinct precipice precipitation
preciseness precursor predator predicament predilection
predisposition predominance preeminence preemie preface
prefecture preference prefix pregnancy prehistory prejudice
prelude premedication premier premiere premonition preoccupation
preparedness preponderance preposition prerequisite prerogative
presbytery preschooler prescience presentiment preservative
presidency pretense prevalence prevention priesthood primer
primrose princedom printout priory prism privation privateer
probity proclamation proclivity procrastination proctor procurement
prodigy profanity proficiency profundity progeny progesterone
prognostication prohibitionist projectile proletariat proliferation
promenade prominence promontory promptness pronouncement
pronunciation propane propensity prophecy proponent proprietorship
propriety propulsion prosecution proselyte prospector prostration
protagonist protege protocol proton prototype protractor
protrusion provenance proverb providence provocation prow prowess
prowler proximity prude prudence psalm pseudonym psyche psychiatry
psychoanalysis psychotherapy pterodactyl puberty publican puddle
pueblo puffin pugilist pulley pulpit pulsation puma pumice
punctuality pundit pungency punt puppeteer purgatory purification
purist purity purr purview pushcart pussycat putter putty pygmy
pylon pyre pyromania python quackery quadrangle quadriceps
quadruped quagmire quail quaintness quake qualm quandary quarantine
quark quartet quasar quatrain quay queasiness quell quench
quicksand quietude quill quince quintet quip quirk quiver quorum
rabbi rabble rabies raccoon racetrack raceway racketeer raconteur
radiance radiograph radioisotope radiotherapy radius raffle
rafter ragtime ragweed raider railhead raiment rainfall rainforest
rainstorm rainwater rajah rampage rampart rancher rancor randomness
ranger rapidity rapport rapprochement rapture rarity rascal
raspberry ratchet ratification rationality rattler rattlesnake
raucousness ravine rawhide rayon razorback reactionary reactor
readability readout reagent realism realtor reaper reappearance
rearrangement reassurance rebirth rebuke recantation
recapitulation recidivism recipient reciprocity recitation
recklessness reclamation recluse recollection recompense
reconciliation reconnaissance reconsideration rectangle rectitude
rectory recuperation redemption redhead redistribution redwood
reenactment referendum refill refinement reflector reflux
reforestation reformation reformer refraction refrain refreshment
refrigeration refuge regalia regatta regency regeneration regent
regime regiment regularity regurgitation rehash reimbursement
reincarnation reindeer reinforcement reinstatement reiteration
rejoinder rejuvenation relapse relegation reliance relic
reluctance remembrance reminiscence remission remittance remorse
remoteness renal renegade renewal renown renunciation
reorganization reparation repast repatriation repayment repertoire
repertory replenishment replication repose repository
reprehension repression reprieve reprimand reprisal reproach
reprobate reproduction reptile republic repudiation repugnance
repulsion requiem requisition rescinder resentment reservist
residency resignation resilience resin resonance resurgence
resurrection resuscitation retaliation retardation reticence
retinue retort retraction retribution retrospect revelry
reverberation reverence reverie revocation revolver revue
rhapsody rhinestone rhinoceros rhubarb rhyme riboflavin rickshaw
ricochet riddance ridicule riffraff rifleman rift rigging
righteousness rigidity rigmarole rind ringleader ringworm riot
riposte ripple rite rivalry rivulet roadblock roadrunner roadside
roadster roadway roamer roan roast robber robbery robustness
rocker rodent rodeo roebuck roominess rooster rootlet rosary
rosebud rosette roster rostrum rotunda roughage roughneck roulette
roundabout roundup rout rowboat rowdiness royalty rubble rubella
rucksack rudder rudeness rudiment ruffian rumba rumble rump
runaway rundown rung runoff runt rupee ruse rustler rut
rutabaga sabbatical saber sabotage saboteur sac sachet sacrament
sacredness sacrilege saddlebag sadism sadness safari safeguard
saffron sagacity sagebrush sailboat salamander salesmanship
salesperson saline saliva salutation salvation salve samba
sanatorium sanctity sandbag sandbox sandpaper sandstone sanitarium
sanitation sapling sapphire sarcasm sarcoma sardine sash
satchel satin satire saturation sauna savanna savant sawdust
sawmill saxophone scabbard scaffolding scallion scallop scamp
scantiness scapegoat scarcity scarecrow scavenger scepter schematic
schism scholastic schooner sciatica scimitar scintillation scion
scoliosis scone scooter scorecard scorer scorpion scoundrel
scourge scow scrapbook scraper scrapple scrawl screwdriver
scribble scribe scrimmage scroll scrotum scruple scrutiny scuffle
sculpin scurvy scuttlebutt seabird seaboard seacoast seafarer
seafood seagull seahorse sealant seam seamstress seance seaplane
seaport searchlight seashell seashore seasickness seaweed
secession seclusion secrecy secretariat sect sedative sediment
seduction seedling seepage seer seesaw seizure selectivity
selectman semantics semblance semicolon seminarian seminary
senility sensibility sensor sentinel sentry sepsis septicemia
sepulcher sequel sequin serenade serenity serf sergeant serum
servitude setback settee severance severity sewer sexton
shackle shale shallows shaman shamrock shank shantytown
shareholder shearer sheath sheathing sheen sheepdog
sheepherder sheepskin sheikh shellac shellfish shenanigan
shepherdess sherbet sheriff sherry shingle shinbone shipbuilder
shipmate shipwreck shipyard shirttail shoal shoehorn shoelace
shoemaker shopkeeper shoplifter shoreline shortcake shortcoming
shortcut shortfall shorthand shortstop shotgun showcase showdown
showmanship showroom shrapnel shrewdness shriek shrillness shroud
shrubbery shudder shuffleboard shutter shyness sibilance sickle
sickroom sideboard sideburn sidekick sideline sideshow sidestep
sidewall siding sierra siesta sieve signet signification signor
silhouette silicon silicone silliness silo silt silverware
similarity simile simplification simplicity simulcast sinew
singularity sinkhole sinusitis sir sire sirloin sirup sisterhood
sitar skateboard skeptic skepticism sketchbook skewer
skidding skiff skirmish skit skullcap skunk skylark skylight
skyline skyscraper slab slacker slang slant slat slaughter
slaughterhouse slavery sledgehammer sleekness sleeper sleet
sleigh slick slicker slime sling slingshot slipcover slipperiness
sliver slob sloop slop sloth slowdown sludge slugger sluice
slumber slump slur slush smallpox smattering smelt smirk smock
smokestack smoothie smorgasbord smudge smugness snail snapdragon
snapshot snare snarl sneak sneer snippet snob snobbery snorkel
snort snout snowball snowdrift snowfall snowflake snowman
snowmobile snowplow snowshoe snowstorm snuffbox soapstone
sobriety socialite sociologist sod soda sodium softball
softener sojourn solace solarium solder soldier solemnity
solicitation solicitude soliloquy solitaire solitude solstice
solubility solvency sombrero somersault somnolence sonar sonata
songbird songwriter sonnet sonority sophistication sophomore
soprano sorbet sorcerer sorcery sordidness soreness sorghum
sorority sortie souffle soundness soundtrack soupspoon sourness
sousaphone southerner southpaw souvenir sovereign spaciousness
spackle spaghetti spaniel spank sparkle sparkplug spat spate
spatula spawn spearmint specialization specificity speck
spectacle specter spectrometer speculator speedboat speedometer
speedway spellbinder spelunker sphincter sphinx spigot spinal
spindle spinner spinster spirituality spittle spittoon splendor
splinter spoilage spoiler spokesperson spoliation sponsorship
spontaneity spool sportsman sportsmanship spotlight sprig
sprinkler sprocket spruce spur spyglass squabble squadron squalor
squanderer squatter squeak squeegee squid squiggle squire stadium
stagecoach stagnation staircase stairway stairwell stakeout
stalemate stallion stalwart stamen stampede stanchion standby
standoff standout standpipe standstill stardom starfish
starlight starling statehood statesman statesmanship staple
stationery statistician statuette stave steadiness steakhouse
stealth steamboat steamer steamship steed steeple steeplechase
stein stenographer stepbrother stepchild stepdaughter stepfather
stepladder stepmother stepsister stepson stereo sterility
sterilization sternness stethoscope stevedore stickler stiffness
stilt stimulant stinger stinginess stipulation stockade
stockbroker stockholder stockpile stockroom stoicism stoker
stole stolidity stomachache stonemason stopgap stoplight
stopover stoppage stopwatch storefront storehouse storekeeper
storeroom stork stowaway straggler straightjacket strainer
strand stranglehold strangulation stratagem stratosphere
streetcar streetlight strep stricture stringency stripling
stroller stronghold strongman strudel strut stubble stucco
studiousness stupor sturgeon stutter sty stylist stylus
subcommittee subcontinent subcontractor subculture subdivision
subgroup subjection subjugation sublease sublimation submarine
submersion subordinate subplot subpoena subscript subservience
subsistence substation subterfuge subtlety subtotal subtraction
suburbia subversion successor succotash succulence suds
suede suet suffocation suffrage sufficiency suffusion
suitability suitor sulfur sullenness sultan summation summerhouse
summitry sundae sundial sundown sunfish sunflower sunlight
sunroof sunshine superabundance superintendent superiority
superlative supermarket superpower superstar superstition
supertanker supervision supplication suppository supremacy
surcharge surefootedness surfboard surgeon suspension sustenance
swagger swampland swan swatch swath sweatband sweatshirt
sweepstakes sweetheart sweetness swelter swimsuit swindle
swindler swine swirl switchblade switchboard swordfish sycamore
sycophant syllabus sylph symposium synagogue synapse synchrony
syndicate synod synonym synopsis syntax synthesizer syphilis
systole tabernacle tableau tablecloth tablespoonful tabloid
tabulation tachycardia tact tactician tadpole taffeta taffy
tailgate taillight tailspin takeoff takeover talc talisman
talkativeness tallow talon tamale tambourine tanager tandem
tangent tangerine tangibility tango tankard tanker tannery
tantrum taproot tarantula tariff tarp tarpaulin tartan tartar
taskmaster tassel tastefulness tatter tattle tattoo taupe
tavern tawdriness taxation taxicab taxidermist taxonomy teabag
teakettle teakwood teamster teapot teardrop tearoom teaspoonful
technicality technologist tectonics tedium teepee telecast
telegraph telemetry telepathy teleprompter telethon televangelist
tembre temerity temperament temperance tempest templet tenacity
tenancy tenderness tendril tenement tenet tenor tentacle
tentativeness tepee termagant terminology termite terrarium
terrier territoriality terrorism terrorist testator testimonial
tetanus tether textile thankfulness thatch theatrics theologian
theorem theorist therapist thermos thermostat thicket thighbone
thimble thoracotomy thoroughbred thoroughfare thoroughness
thriftiness throwback thrush thug thumbnail thumbtack
thunderbolt thundershower thunderstorm thyme thyroidectomy tiara
tic tidbit tightness tightrope tigress tiller timberline
timekeeper timepiece timetable timidity tinderbox tinfoil tinge
tinker tinsel tint tirade tiredness titan tithe titillation
toadstool toastmaster toboggan tocsin toddler toehold toga
toggle toil toiletry tollbooth tomahawk tomboy tombstone tomcat
tomfoolery tonality toner tonic tonnage tonsillitis
toolbox toothache toothbrush toothpaste toothpick topaz topcoat
topography topping topsoil torment tornado torpedo torpor
torrent tortilla torture totem toucan touchdown touchstone
toughness toupee tourniquet towline township towrope
toxicity toxicology toxin tracement trachea tracheotomy
trackage tract traction tractor trademark tradesman
traditionalist trafficker tragedian trailblazer trainload
traitor trajectory trampoline tranquility transcendence
transducer transept transgression transistor transplantation
transom transparency trapeze trapper trash trauma
travail traveler travelogue travesty trawler treachery treadle
treatise trellis tremor trespasser trestle triad tribesman
tributary triceps trickery trickle trifle trill trillium
trimester trinket trio tripod triplet triplicate tripwire
triteness triumvirate trivia trombone troubadour troublemaker
trough troupe trouser trowel truancy truce truckload truculence
trumpeter truncheon trundle trustworthiness tryout tryst tsar
tuba tubing tuft tugboat tulip tumbleweed tumult tundra tuner
tungsten tunic turbulence turf turmoil turnaround turncoat
turnip turnpike turnstile turntable turpentine turret tusk
tussle tutelage tutorial tuxedo twang tweed twilight
twine twinge twirl typescript typesetter typewriter typhoid
typist typography tyrant ubiquity udder ulceration ulna ultimatum
ultrasound umbilicus umpire unanimity unawareness uncertainty
underbrush undercarriage
""".split()

VERBS = """
accept access accommodate accompany accomplish accumulate ache achieve
acknowledge acquire act activate adapt add address adhere adjust
administer admire admit adopt advance advise advocate affect afford
agree aim alert align allege alleviate allocate allow alter ambulate
amend amputate analyze anchor announce annoy answer anticipate apologize
appeal appear applaud apply appoint appreciate approach approve argue
arise arrange arrest arrive articulate ask aspirate assert assess assign
assist associate assume assure attach attack attain attempt attend
attract attribute audit augment auscultate authorize avoid await awake
awaken back bake balance ban bandage bargain base bathe battle bear
beat become beg begin behave believe belong bend benefit bet bind bite
blame blast bleed blend bless blink block blow blunt blur board boast
boil bolt bomb bond book boost border bother bounce bound bow brace
brag branch brand breathe breed brew bridge brighten bring broadcast
broaden browse bruise brush buckle bud budget build bump burn burst
bury buy buzz calculate calibrate call calm camp cancel cap capture
care carry carve cast catch cater cause cease celebrate center certify
chain challenge change characterize charge chart chase chat cheat check
cheer chew chill chip choke choose chop circle circulate cite claim
clamp clarify classify clean cleanse clear climb cling clip close clot
cloud cluster coach coat coil collaborate collapse collect combine come
comfort command comment commit communicate compare compensate compete
compile complain complete comply compose compress compute conceal
concede conceive concentrate conclude condemn conduct confer confess
configure confine confirm confront confuse connect consent conserve
consider consist console consolidate constitute constrain constrict
construct consult consume contact contain contaminate contemplate
continue contract contrast contribute control convene convert convey
convince cook cool cooperate coordinate cope copy correct correlate
correspond cost cough counsel count counter cover crack cramp crash
crawl create credit creep cross crush cry culture cure curl cut cycle
damage dampen dance dare darken date deal debate debride decay decide
declare decline decompress decorate decrease dedicate deduce deepen
defeat defend defer define deflate degrade dehydrate delay delegate
delete deliver demand demonstrate denote deny depart depend depict
deplete deploy deposit depress deprive derive descend describe deserve
design designate desire destroy detach detail detect deteriorate
determine devastate develop deviate devise devote diagnose dictate
differ differentiate dig digest dilate dilute diminish dine dip direct
disagree disappear discharge disclose disconnect discontinue discount
discourage discover discuss disinfect dislike dislocate dismiss
dispense displace display dispose disrupt dissect dissolve distend
distinguish distort distract distribute disturb dive divert divide
document dominate donate dose doubt drag drain draw dream dress drift
drill drink drip drive drop drown dry dump duplicate dwell ease eat
echo edit educate elaborate elect elevate eliminate elicit embed
embrace emerge emphasize employ empty enable enact enclose encounter
encourage end endorse endure enforce engage enhance enjoy enlarge
enlist enrich enroll ensure enter entertain entitle equip erase erode
erupt escalate escape establish estimate evacuate evaluate evaporate
evert evoke evolve exacerbate examine exceed excel exchange excise
excite exclude excrete excuse execute exercise exert exhale exhaust
exhibit exist exit expand expect expel experience expire explain
explode explore export expose express extend extract extubate face
facilitate fade fail fall falter fast fasten favor fax fear feed feel
fetch fight figure file fill filter finalize find finish fire fit fix
flag flare flash flatten flavor flee flex fling flip float flood floss
flourish flow fluctuate flush fly focus fold follow forbid force
forecast forget forgive form formulate foster fracture frame freeze
frighten frown fulfill fund furnish fuse gain gather gauge gaze
generate give glance glow glue go govern grab grade graduate graft
grant grasp greet grieve grind grip groan groom grow guarantee guard
guess guide hand handle hang happen harden harm harvest hate haul head
heal hear heat heighten help hesitate hide highlight hinder hire hit
hold honor hook hope hospitalize host house hover hug hum hurry hurt
hydrate identify ignore illustrate imagine immobilize immunize impact
impair implant implement imply import impose impress improve incise
include incorporate increase incur indicate induce infect infer
infiltrate inflate inform infuse ingest inhale inherit inhibit initiate
inject injure innervate inquire insert insist inspect inspire install
instill instruct insulate insure integrate intend intensify interact
intercept interfere interpret interrupt intervene interview introduce
intubate invade invent invert invest investigate invite involve
irrigate irritate isolate issue itch join joke judge jump justify keep
kick kill kiss kneel knit knock know label lack land last latch laugh
launch lay lead leak lean leap learn lease leave lecture lend lengthen
lessen let level license lick lie lift light lighten like limit limp
line linger link list listen live load locate lock log look loosen
lose love lower lubricate maintain make manage mandate manifest
manipulate manufacture map march mark market marry mask massage master
match mature maximize mean measure mediate meet melt mend mention merge
migrate mind minimize miss mistake mix moan mobilize model moderate
modify moisten monitor motivate mount mourn move multiply mumble murmur
name narrow navigate need neglect negotiate nest note notice notify
nourish numb nurse nurture obey object oblige observe obstruct obtain
occlude occupy occur offend offer open operate oppose opt optimize
order organize orient originate oscillate outline overcome overlap
overlook oversee overwhelm owe own oxygenate pace pack pad page palpate
parse participate pass paste pat patch pause pave pay peak peel
perceive perforate perform perfuse permit persist persuade phone
photograph pick picture pile pin pinch pioneer pitch place plan plant
play plead please pledge plot plug point polish pollute ponder pool
pop pose position possess post postpone pour practice praise pray
precede precipitate predict prefer prep prepare prescribe present
preserve press presume pretend prevail prevent print prioritize probe
proceed process proclaim produce progress prohibit project prolong
promise promote prompt pronounce propose protect protest prove provide
provoke publish pull pulse pump punch puncture punish purchase pursue
push put qualify quantify question quit quote race radiate raise rally
range rank rate reach react read realize reassure rebuild recall
receive recite recognize recommend reconcile reconstruct record recount
recover recruit recur reduce refer refine reflect reform refrain
refresh refuse regain regard register regret regulate rehabilitate
rehearse reinforce reject relate relax release relieve relocate rely
remain remark remember remind remove renew rent reorganize repair
repeat replace reply report reposition represent reproduce request
require resect reserve reside resist resolve respect respond rest
restore restrain restrict result resume retain retire retract retrieve
return reveal reverse review revise revive reward ride ring rinse rise
risk roll rotate rub ruin rule run rupture rush sample sanitize satisfy
save say scan scar scare schedule scope score scratch scream screen
scrub seal search season seat secure sedate see seek seem segment
seize select sell send sense separate sequence serve set settle sever
sew shake shape share sharpen shave shed shift shine ship shock shoot
shop shorten shout show shrink shut sigh sign signal simplify simulate
sing sink sip sit size skip slam sleep slice slide slip slow smell
smile smoke smooth snap sneeze sniff soak soften solve soothe sort
sound space spare speak specify speculate speed spell spend spike spill
spin spit splint split spot sprain spray spread spring squeeze
stabilize stack staff stage stain stand staple stare start starve state
stay steal steer stem step sterilize stick stiffen stimulate stir
stitch stock stop store straighten strain strengthen stress stretch
strike strip strive stroke struggle study stuff stumble submit subside
substitute subtract succeed suck suction suffer suggest suit summarize
supervise supplement supply support suppose suppress surge surprise
surround survey survive suspect suspend sustain suture swab swallow
swear sweat sweep swell swim swing switch sympathize synthesize tackle
tailor take talk tap tape target taste teach tear tease tell tend
terminate test testify thank thaw thicken think thrive throw tie
tighten tilt time tip tire titrate tolerate top total touch tour tow
trace track trade train transfer transform transfuse transition
translate transmit transplant transport trap travel treat tremble
trend trigger trim trip trust try tuck tug tumble turn twist type
undergo underline undermine understand undertake unify unite unload
unlock unplug unveil update upgrade uphold upset urge use utilize
vaccinate validate value vanish vary venture verify vibrate view visit
visualize voice void volunteer vomit vote wait wake walk wander want
warm warn wash waste watch water wave weaken wean wear weep weigh
welcome wheeze whisper widen win wind wipe wish withdraw withhold
witness wonder work worry worsen wrap write yawn yell yield zip zoom
""".split()

# Gradable adjectives that take -er/-est.
ADJECTIVES = """
angry big bitter black bland bleak blunt bold brave bright broad brown
busy calm cheap clean clear clever close cloudy coarse cold cool crazy
curly dark deep dense dim dirty dry dull dumb early easy faint fair
fancy fast fat few fierce fine firm fit flat fresh full funny gentle
grand gray great green happy hard harsh heavy high hot hungry itchy
keen kind large late lazy lean light likely little lively lonely long
loose loud low lucky mild moist murky narrow near neat new nice noisy
numb odd old pale plain poor proud pure quick quiet rare raw rich ripe
rough round sad safe salty shallow sharp shiny short sick simple skinny
sleepy slim slow small smart smooth soft sore sour steady steep sticky
stiff still strange strict strong sturdy sweet swift tall tan tender
tense thick thin tidy tight tiny tired tough true warm weak wealthy
weary wet wide wild wise yellow young
""".split()


def pluralize(noun: str) -> str:
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    return noun + "s"


def verb_forms(verb: str) -> dict[str, str]:
    """Regular -s / -ed / -ing forms with e-drop and doubling."""
    forms = {}
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in VOWELS:
        forms["s"] = verb[:-1] + "ies"
        forms["ed"] = verb[:-1] + "ied"
        forms["ing"] = verb + "ing"
    elif verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        forms["s"] = verb + "s"
        forms["ed"] = verb + "d"
        forms["ing"] = verb[:-1] + "ing"
    else:
        stem = verb + verb[-1] if verb in DOUBLE_FINAL else verb
        forms["s"] = pluralize(verb)
        forms["ed"] = stem + "ed"
        forms["ing"] = stem + "ing"
    return forms


def comparative_forms(adj: str) -> tuple[str, str]:
    if adj.endswith("y") and len(adj) > 1 and adj[-2] not in VOWELS:
        return adj[:-1] + "ier", adj[:-1] + "iest"
    if adj.endswith("e"):
        return adj + "r", adj + "st"
    if (
        len(adj) >= 3
        and adj[-1] not in VOWELS + "wxy"
        and adj[-2] in VOWELS
        and adj[-3] not in VOWELS
    ):
        return adj + adj[-1] + "er", adj + adj[-1] + "est"
    return adj + "er", adj + "est"


def build() -> dict[str, str]:
    pairs: dict[str, str] = {}

    def add(surface: str, root: str):
        # First writer wins; irregulars are added first on purpose.
        if surface != root and surface not in pairs:
            pairs[surface] = root

    for plural, singular in IRREGULAR_PLURALS.items():
        add(plural, singular)
    for base, (past, participle) in IRREGULAR_VERBS.items():
        add(past, base)
        add(participle, base)

    for verb in dict.fromkeys(VERBS):
        forms = verb_forms(verb)
        add(forms["s"], verb)
        add(forms["ing"], verb)
        if verb not in IRREGULAR_VERBS:
            add(forms["ed"], verb)
        if forms["ing"] in GERUND_NOUNS:
            add(forms["ing"] + "s", forms["ing"])
        # British -ise spellings of -ize verbs map to the -ize lemma.
        if verb.endswith("ize"):
            ise = verb[:-3] + "ise"
            add(ise, verb)
            add(ise + "s", verb)
            add(ise + "d", verb)
            add(ise[:-1] + "ing", verb)

    for noun in dict.fromkeys(NOUNS):
        add(pluralize(noun), noun)

    for adj in dict.fromkeys(ADJECTIVES):
        er, est = comparative_forms(adj)
        add(er, adj)
        add(est, adj)

    # Transitive closure so chained entries (findings -> finding -> find)
    # all land on the terminal root.
    for surface in list(pairs):
        root = pairs[surface]
        seen = {surface}
        while root in pairs and root not in seen:
            seen.add(root)
            root = pairs[root]
        pairs[surface] = root
    return pairs


def main():
    pairs = build()
    bad = [
        s
        for s, r in pairs.items()
        if not (s.isalpha() and r.isalpha() and s.islower() and r.islower() and s.isascii() and r.isascii())
    ]
    if bad:
        raise SystemExit(f"non-alphabetic or non-lowercase entries: {bad[:10]}")
    lines = [f"{surface}\t{root}" for surface, root in sorted(pairs.items())]
    header = (
        "# Pinned lemma dictionary: surface<TAB>root, one pair per line.\n"
        "# Generated by tools/build_lemma_dict.py; edit the lexicon there\n"
        "# and regenerate rather than editing this file.\n"
    )
    OUT_PATH.write_text(header + "\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} pairs to {OUT_PATH}")


if __name__ == "__main__":
    main()
